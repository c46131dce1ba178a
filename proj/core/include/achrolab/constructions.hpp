#pragma once

#include "achrolab/matrix.hpp"

namespace achrolab {

/// Shape of the 6 x q lower-bound construction for odd q >= 7.
///
/// The palette splits into nine head colours "1".."9" living in the first
/// three columns (frequency 2) and four blocks x/y/z/t of block_size colours
/// each (frequency 3), where block_size = (q-3)/2 and the total colour count
/// is 4*block_size + 9 = 2q + 3.
struct ConstructionLayout {
    int q = 0;
    int block_size = 0;
    int colour_count() const { return 4 * block_size + 9; }
};

ConstructionLayout odd_q_layout(int q); // throws unless q odd and >= 7

/// The explicit 6 x q proper complete matrix with 2q+3 colours witnessing
/// achr(K_6 [] K_q) >= 2q+3 for odd q >= 7. Head colours fill columns 1..3;
/// block colours fill two blocks of block_size columns, rows 2, 5 and 6
/// carrying their block sequence cyclically shifted one step right.
ColourMatrix build_odd_q_matrix(int q);

enum class CliqueOrientation { Row, Column };

/// 1 x n (or n x 1) matrix with n distinct colours "1".."n" - the single
/// clique baseline, trivially proper and complete.
ColourMatrix build_single_clique(int n, CliqueOrientation orientation);

} // namespace achrolab
