#include "blockdef/zpm.hpp"

#include <algorithm>

#include "blockdef/errors.hpp"

namespace blockdef {

ZpmSpan::ZpmSpan(u64 p, int m, int width) : p_(p), m_(m), width_(width) {
    pm_ = pow_u64(p, (u64)m);
}

namespace {

int val_of(u64 x, u64 p, int m) {
    if (x == 0) return m;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

} // namespace

void ZpmSpan::add(std::vector<u64> v) {
    for (auto& x : v) x %= pm_;
    insert_normalized(std::move(v));
}

void ZpmSpan::insert_normalized(std::vector<u64> v) {
    while (true) {
        int lead = -1;
        for (int c = 0; c < width_; ++c)
            if (v[c] != 0) {
                lead = c;
                break;
            }
        if (lead < 0) return;
        int val = val_of(v[lead], p_, m_);
        // existing pivot at this column?
        int idx = -1;
        for (size_t r = 0; r < rows_.size(); ++r)
            if (lead_col_[r] == lead) idx = (int)r;
        if (idx >= 0 && lead_val_[idx] <= val) {
            // eliminate v[lead] using the pivot (lead entry is exactly p^val')
            u64 q = v[lead] / pow_u64(p_, (u64)lead_val_[idx]);
            const auto& row = rows_[idx];
            for (int c = 0; c < width_; ++c)
                v[c] = (v[c] + (pm_ - (q * row[c]) % pm_)) % pm_;
            continue;
        }
        // normalize v so the lead entry is exactly p^val
        u64 unit = v[lead] / pow_u64(p_, (u64)val);
        u64 iu = inv_mod(unit % pm_, pm_);
        for (int c = 0; c < width_; ++c) v[c] = (v[c] * iu) % pm_;
        if (idx >= 0) {
            // swap in the sharper pivot, reinsert the old row
            std::vector<u64> old = rows_[idx];
            rows_[idx] = v;
            int old_val = lead_val_[idx];
            lead_val_[idx] = val;
            (void)old_val;
            // saturation of the new pivot
            std::vector<u64> sat(width_);
            u64 mult = pow_u64(p_, (u64)(m_ - val));
            for (int c = 0; c < width_; ++c) sat[c] = (v[c] * mult) % pm_;
            insert_normalized(std::move(old));
            insert_normalized(std::move(sat));
        } else {
            rows_.push_back(v);
            lead_col_.push_back(lead);
            lead_val_.push_back(val);
            std::vector<u64> sat(width_);
            u64 mult = pow_u64(p_, (u64)(m_ - val));
            for (int c = 0; c < width_; ++c) sat[c] = (v[c] * mult) % pm_;
            insert_normalized(std::move(sat));
        }
        // keep rows ordered by pivot column and fully reduce tails
        std::vector<int> order(rows_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return lead_col_[a] < lead_col_[b]; });
        std::vector<std::vector<u64>> nr;
        std::vector<int> nc, nv;
        for (int i : order) {
            nr.push_back(std::move(rows_[i]));
            nc.push_back(lead_col_[i]);
            nv.push_back(lead_val_[i]);
        }
        rows_ = std::move(nr);
        lead_col_ = std::move(nc);
        lead_val_ = std::move(nv);
        // reduce entries of each row at later pivot columns to canonical range
        for (size_t r = 0; r < rows_.size(); ++r) {
            for (size_t s = r + 1; s < rows_.size(); ++s) {
                u64 entry = rows_[r][lead_col_[s]];
                u64 piv = pow_u64(p_, (u64)lead_val_[s]);
                u64 q = entry / piv;
                if (q) {
                    for (int c = 0; c < width_; ++c)
                        rows_[r][c] = (rows_[r][c] + (pm_ - (q * rows_[s][c]) % pm_)) % pm_;
                }
            }
        }
        return;
    }
}

std::vector<u64> ZpmSpan::normal_form(std::vector<u64> v) const {
    for (auto& x : v) x %= pm_;
    for (size_t r = 0; r < rows_.size(); ++r) {
        u64 entry = v[lead_col_[r]];
        u64 piv = pow_u64(p_, (u64)lead_val_[r]);
        u64 q = entry / piv;
        if (q) {
            for (int c = 0; c < width_; ++c)
                v[c] = (v[c] + (pm_ - (q * rows_[r][c]) % pm_)) % pm_;
        }
    }
    return v;
}

bool ZpmSpan::contains(const std::vector<u64>& v) const {
    auto nf = normal_form(v);
    for (u64 x : nf)
        if (x) return false;
    return true;
}

std::vector<u64> ZpmSpan::coord_limits() const {
    std::vector<u64> limits(width_, pm_);
    for (size_t r = 0; r < rows_.size(); ++r)
        limits[lead_col_[r]] = pow_u64(p_, (u64)lead_val_[r]);
    return limits;
}

u64 ZpmSpan::quotient_size() const {
    u64 total = 1;
    for (u64 l : coord_limits()) total *= l;
    return total;
}

u64 ZpmSpan::span_size() const {
    u64 total = 1;
    for (u64 l : coord_limits()) total *= pm_ / l;
    return total;
}

std::vector<std::vector<u64>> ZpmSpan::enumerate(u64 cap) const {
    BLOCKDEF_CHECK_INTERNAL(span_size() <= cap, "CapExceeded", "span too large to enumerate");
    std::vector<std::vector<u64>> out{std::vector<u64>(width_, 0)};
    std::sort(out.begin(), out.end());
    for (const auto& row : rows_) {
        std::vector<std::vector<u64>> next;
        for (const auto& base : out) {
            std::vector<u64> cur = base;
            for (u64 k = 0; k < pm_; ++k) {
                next.push_back(cur);
                for (int c = 0; c < width_; ++c) cur[c] = (cur[c] + row[c]) % pm_;
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out = std::move(next);
    }
    return out;
}

std::optional<std::vector<u64>> zpm_solve_row(const std::vector<std::vector<u64>>& gens,
                                              const std::vector<u64>& b, u64 p, int m) {
    if (gens.empty()) {
        for (u64 x : b)
            if (x % pow_u64(p, (u64)m)) return std::nullopt;
        return std::vector<u64>{};
    }
    // track combos by augmenting each generator with an indicator block
    int w = (int)gens[0].size();
    int n = (int)gens.size();
    u64 pm = pow_u64(p, (u64)m);
    ZpmSpan span(p, m, w + n);
    for (int i = 0; i < n; ++i) {
        std::vector<u64> v(w + n, 0);
        for (int c = 0; c < w; ++c) v[c] = gens[i][c] % pm;
        v[w + i] = 1;
        span.add(v);
    }
    // reduce (b | 0): if the data part clears, the combo part is -x
    std::vector<u64> v(w + n, 0);
    for (int c = 0; c < w; ++c) v[c] = b[c] % pm;
    // only reduce using pivots in the data columns
    std::vector<u64> combo(n, 0);
    for (size_t r = 0; r < span.rows().size(); ++r) {
        int lc = span.pivot_cols()[r];
        if (lc >= w) continue;
        u64 piv = pow_u64(p, (u64)span.pivot_vals()[r]);
        u64 q = v[lc] / piv;
        if (q) {
            const auto& row = span.rows()[r];
            for (int c = 0; c < w + n; ++c) v[c] = (v[c] + (pm - (q * row[c]) % pm)) % pm;
        }
    }
    for (int c = 0; c < w; ++c)
        if (v[c]) return std::nullopt;
    for (int i = 0; i < n; ++i) combo[i] = (pm - v[w + i]) % pm;
    return combo;
}

} // namespace blockdef
