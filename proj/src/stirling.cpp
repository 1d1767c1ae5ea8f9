#include "pado/stirling.hpp"

#include <mutex>
#include <vector>

namespace pado {

namespace {

std::mutex s_mutex;
// row nu holds s(nu, 0..nu)
std::vector<std::vector<Int>> s1_rows = {{Int(1)}};
std::vector<std::vector<Int>> s2_rows = {{Int(1)}};

void grow(unsigned long nu) {
    while (s1_rows.size() <= nu) {
        unsigned long r = s1_rows.size();
        std::vector<Int> row1(r + 1), row2(r + 1);
        const auto& p1 = s1_rows[r - 1];
        const auto& p2 = s2_rows[r - 1];
        for (unsigned long j = 0; j <= r; ++j) {
            // s(r, j) = s(r-1, j-1) - (r-1) s(r-1, j)
            Int a = (j >= 1 && j - 1 < p1.size()) ? p1[j - 1] : Int(0);
            Int b = (j < p1.size()) ? p1[j] : Int(0);
            row1[j] = a - Int(r - 1) * b;
            // S2(r, j) = S2(r-1, j-1) + j S2(r-1, j)
            Int c = (j >= 1 && j - 1 < p2.size()) ? p2[j - 1] : Int(0);
            Int d = (j < p2.size()) ? p2[j] : Int(0);
            row2[j] = c + Int(j) * d;
        }
        s1_rows.push_back(std::move(row1));
        s2_rows.push_back(std::move(row2));
    }
}

}  // namespace

Int stirling_first(unsigned long nu, unsigned long j) {
    if (j > nu) return Int(0);
    std::lock_guard<std::mutex> lock(s_mutex);
    grow(nu);
    return s1_rows[nu][j];
}

Int stirling_second(unsigned long nu, unsigned long j) {
    if (j > nu) return Int(0);
    std::lock_guard<std::mutex> lock(s_mutex);
    grow(nu);
    return s2_rows[nu][j];
}

}  // namespace pado
