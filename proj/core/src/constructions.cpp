#include "achrolab/constructions.hpp"

#include <stdexcept>
#include <string>

namespace achrolab {

ConstructionLayout odd_q_layout(int q) {
    if (q < 7 || q % 2 == 0)
        throw std::invalid_argument("construction needs odd q >= 7, got q=" + std::to_string(q));
    return ConstructionLayout{q, (q - 3) / 2};
}

ColourMatrix build_odd_q_matrix(int q) {
    const ConstructionLayout layout = odd_q_layout(q);
    const int s = layout.block_size;

    auto block = [s](char u, int j) { return std::string(1, u) + std::to_string(j); };
    // one-step right rotation of (u_1 .. u_s): position j holds u_{j-1}, u_0 = u_s
    auto shifted = [&](char u, int j) { return block(u, (j - 2 + s) % s + 1); };

    const char * head[6] = {"123", "456", "789", "312", "564", "897"};

    std::vector<std::vector<std::string>> rows(6);
    for (int i = 0; i < 6; ++i) {
        rows[i].reserve(q);
        for (int c = 0; c < 3; ++c)
            rows[i].push_back(std::string(1, head[i][c]));
    }
    for (int j = 1; j <= s; ++j) { // columns 4 .. s+3
        rows[0].push_back(block('x', j));
        rows[1].push_back(shifted('x', j));
        rows[2].push_back(block('t', j));
        rows[3].push_back(block('z', j));
        rows[4].push_back(shifted('t', j));
        rows[5].push_back(block('y', j));
    }
    for (int j = 1; j <= s; ++j) { // columns s+4 .. q
        rows[0].push_back(block('y', j));
        rows[1].push_back(block('z', j));
        rows[2].push_back(block('x', j));
        rows[3].push_back(block('t', j));
        rows[4].push_back(shifted('y', j));
        rows[5].push_back(shifted('z', j));
    }
    return ColourMatrix::from_tokens(rows);
}

ColourMatrix build_single_clique(int n, CliqueOrientation orientation) {
    if (n < 1)
        throw std::invalid_argument("clique size must be positive");
    std::vector<std::vector<std::string>> rows;
    if (orientation == CliqueOrientation::Row) {
        rows.emplace_back();
        for (int c = 1; c <= n; ++c)
            rows.front().push_back(std::to_string(c));
    } else {
        for (int c = 1; c <= n; ++c)
            rows.push_back({std::to_string(c)});
    }
    return ColourMatrix::from_tokens(rows);
}

} // namespace achrolab
