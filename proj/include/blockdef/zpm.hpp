#pragma once

#include <optional>
#include <vector>

#include "blockdef/intutil.hpp"

namespace blockdef {

// Row span of integer vectors over Z/p^m in Howell-style normal form: pivot
// columns strictly increase, each pivot entry is a power of p, and saturation
// rows are included so that greedy left-to-right reduction decides membership
// and yields canonical coset representatives.
class ZpmSpan {
public:
    ZpmSpan() = default;
    ZpmSpan(u64 p, int m, int width);

    u64 p() const { return p_; }
    int precision() const { return m_; }
    u64 modulus() const { return pm_; }
    int width() const { return width_; }

    void add(std::vector<u64> v); // insert a generator (entries taken mod p^m)

    // canonical representative of v + span
    std::vector<u64> normal_form(std::vector<u64> v) const;
    bool contains(const std::vector<u64>& v) const;

    // number of elements of the quotient (Z/p^m)^width / span
    u64 quotient_size() const;
    // number of elements of the span itself
    u64 span_size() const;

    // all span elements (canonical vectors), sorted; guarded by cap
    std::vector<std::vector<u64>> enumerate(u64 cap) const;

    // iterate canonical quotient representatives; f returns false to stop
    template <class F>
    void for_each_quotient_rep(F&& f) const {
        std::vector<u64> limits = coord_limits();
        std::vector<u64> v(width_, 0);
        while (true) {
            std::vector<u64> copy = v;
            if (!f(copy)) return;
            int i = 0;
            for (; i < width_; ++i) {
                if (++v[i] < limits[i]) break;
                v[i] = 0;
            }
            if (i == width_) return;
        }
    }

    // per-coordinate bound: canonical reps have v[c] < limit[c]
    std::vector<u64> coord_limits() const;

    const std::vector<std::vector<u64>>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return lead_col_; }
    const std::vector<int>& pivot_vals() const { return lead_val_; }

private:
    u64 p_ = 2;
    int m_ = 1;
    u64 pm_ = 2;
    int width_ = 0;
    std::vector<std::vector<u64>> rows_;
    std::vector<int> lead_col_, lead_val_;

    void insert_normalized(std::vector<u64> v);
};

// solve x * A = b over Z/p^m where rows of A generate the target span;
// returns coefficients on the original generators if solvable
std::optional<std::vector<u64>> zpm_solve_row(const std::vector<std::vector<u64>>& gens,
                                              const std::vector<u64>& b, u64 p, int m);

} // namespace blockdef
