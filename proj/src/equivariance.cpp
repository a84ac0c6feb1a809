#include "hilbcert/equivariance.hpp"

#include <numeric>
#include <random>
#include <set>

namespace hilbcert {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw ParameterError("a partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw ParameterError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ParameterError("partition parts must be weakly decreasing");
    }
}

unsigned Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
}

std::vector<Partition> partitions_of(unsigned n) {
    if (n == 0)
        throw ParameterError("n must be >= 1");
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto &self, unsigned remaining, unsigned cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::optional<std::vector<std::vector<std::size_t>>> refinement_grouping(const Partition &lam, const Partition &tau) {
    if (lam.n() != tau.n())
        throw ParameterError("cannot compare partitions of " + std::to_string(lam.n()) + " and " +
                             std::to_string(tau.n()));
    if (lam.n() > max_refinement_n)
        throw ResourceLimitError("refinement search limited to n <= " + std::to_string(max_refinement_n));
    const auto &l = lam.parts();
    const auto &t = tau.parts();
    if (l.size() < t.size())
        return std::nullopt;
    // Restricted-growth strings: block[i] <= 1 + max(block[0..i-1]).
    std::vector<std::size_t> block(l.size(), 0);
    std::optional<std::vector<std::vector<std::size_t>>> found;
    auto rec = [&](auto &self, std::size_t i, std::size_t used) -> bool {
        if (i == l.size()) {
            if (used != t.size())
                return false;
            std::vector<unsigned> sums(used, 0);
            for (std::size_t j = 0; j < l.size(); ++j)
                sums[block[j]] += l[j];
            std::vector<std::size_t> order(used);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });
            for (std::size_t j = 0; j < used; ++j)
                if (sums[order[j]] != t[j])
                    return false;
            std::vector<std::vector<std::size_t>> groups(used);
            for (std::size_t j = 0; j < used; ++j)
                for (std::size_t idx = 0; idx < l.size(); ++idx)
                    if (block[idx] == order[j])
                        groups[j].push_back(idx);
            found = std::move(groups);
            return true;
        }
        for (std::size_t b = 0; b <= used && b < t.size(); ++b) {
            block[i] = b;
            if (self(self, i + 1, std::max(used, b + 1)))
                return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

bool refines(const Partition &lam, const Partition &tau) { return refinement_grouping(lam, tau).has_value(); }

namespace {

long mod(long v, long m) {
    const long r = v % m;
    return r < 0 ? r + m : r;
}

long mulmod(long a, long b, long m) { return long((__extension__(__int128) a * b) % m); }

} // namespace

bool FiniteModel::is_valid(long m, unsigned n, long x, long y) {
    if (m < 2 || n < 2)
        return false;
    x = mod(x, m);
    y = mod(y, m);
    long det = 1;
    for (unsigned i = 0; i + 1 < n; ++i)
        det = mulmod(det, mod(x - y, m), m);
    det = mulmod(det, mod(x + mulmod(long(n - 1) % m, y, m), m), m);
    return std::gcd(det, m) == 1;
}

FiniteModel::FiniteModel(long m, unsigned r, unsigned n, long x, long y)
    : m_(m), r_(r), n_(n), x_(0), y_(0), order_(1) {
    if (m < 2)
        throw ParameterError("modulus must be >= 2");
    if (r < 1)
        throw ParameterError("rank must be >= 1");
    if (n < 2)
        throw ParameterError("need at least two factors");
    x_ = mod(x, m);
    y_ = mod(y, m);
    for (unsigned i = 0; i < r; ++i) {
        if (order_ > max_group_order / m)
            throw ResourceLimitError("group order above " + std::to_string(max_group_order));
        order_ *= m;
    }
    if (!is_valid(m, n, x_, y_))
        throw ParameterError("(x - y)^(n-1) (x + (n-1) y) is not a unit mod " + std::to_string(m));
    times_x_.resize(std::size_t(order_));
    times_y_.resize(std::size_t(order_));
    negate_.resize(std::size_t(order_));
    for (long g = 0; g < order_; ++g) {
        long gx = 0, gy = 0, gn = 0, rest = g, place = 1;
        for (unsigned i = 0; i < r_; ++i) {
            const long digit = rest % m_;
            rest /= m_;
            gx += mulmod(digit, x_, m_) * place;
            gy += mulmod(digit, y_, m_) * place;
            gn += mod(-digit, m_) * place;
            place *= m_;
        }
        times_x_[std::size_t(g)] = gx;
        times_y_[std::size_t(g)] = gy;
        negate_[std::size_t(g)] = gn;
    }
    if (r_ > 1 && order_ <= sum_table_limit) {
        std::vector<std::int32_t> table(std::size_t(order_ * order_));
        for (long g = 0; g < order_; ++g)
            for (long h = 0; h < order_; ++h)
                table[std::size_t(g * order_ + h)] = std::int32_t(add(g, h));
        sum_table_ = std::move(table);
    }
}

long FiniteModel::determinant() const {
    long det = 1;
    for (unsigned i = 0; i + 1 < n_; ++i)
        det = mulmod(det, mod(x_ - y_, m_), m_);
    return mulmod(det, mod(x_ + mulmod(long(n_ - 1) % m_, y_, m_), m_), m_);
}

long FiniteModel::add(long g, long h) const {
    if (r_ == 1) {
        const long s = g + h;
        return s >= m_ ? s - m_ : s;
    }
    if (!sum_table_.empty())
        return sum_table_[std::size_t(g * order_ + h)];
    long out = 0, place = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += ((g % m_ + h % m_) % m_) * place;
        g /= m_;
        h /= m_;
        place *= m_;
    }
    return out;
}

std::vector<long> FiniteModel::apply(const std::vector<long> &p) const {
    if (p.size() != n_)
        throw DimensionError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(n_));
    for (long g : p)
        if (g < 0 || g >= order_)
            throw ParameterError("coordinate outside the group");
    std::vector<long> out;
    apply_into(p, out);
    return out;
}

void FiniteModel::apply_into(const std::vector<long> &p, std::vector<long> &out) const {
    long total = 0;
    for (long g : p)
        total = add(total, g);
    // f(p)_i = x p_i + y (sum_j p_j - p_i).
    out.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = add(times_x_[std::size_t(p[i])], times_y_[std::size_t(add(total, negate_[std::size_t(p[i])]))]);
}

std::string FiniteModel::to_string() const {
    return "(Z/" + std::to_string(m_) + ")^" + std::to_string(r_) + ", n = " + std::to_string(n_) +
           ", (x, y) = (" + std::to_string(x_) + ", " + std::to_string(y_) + ")";
}

namespace {

std::uint64_t point_count(long order, unsigned n) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (total > max_exhaustive_points / std::uint64_t(order))
            throw ResourceLimitError("more than " + std::to_string(max_exhaustive_points) + " points in G^n");
        total *= std::uint64_t(order);
    }
    return total;
}

// Calls visit(p) for every point of G^n in odometer order; stops early
// when visit returns false.
template <class Visit>
void for_each_point(long order, unsigned n, Visit visit) {
    std::vector<long> p(n, 0);
    while (true) {
        if (!visit(p))
            return;
        std::size_t i = 0;
        while (i < n && ++p[i] == order)
            p[i++] = 0;
        if (i == n)
            return;
    }
}

} // namespace

namespace {

// Sorted class sizes of v, written to parts; scratch is overwritten.
void class_sizes(const std::vector<long> &v, std::vector<long> &scratch, std::vector<unsigned> &parts) {
    scratch.assign(v.begin(), v.end());
    std::sort(scratch.begin(), scratch.end());
    parts.clear();
    for (std::size_t i = 0; i < scratch.size();) {
        std::size_t j = i;
        while (j < scratch.size() && scratch[j] == scratch[i])
            ++j;
        parts.push_back(unsigned(j - i));
        i = j;
    }
    std::sort(parts.begin(), parts.end());
}

} // namespace

PreservationResult check_multiplicity_preservation(const FiniteModel &model, std::optional<Sampling> sampling) {
    PreservationResult out;
    std::vector<long> scratch;
    std::vector<long> image;
    std::vector<unsigned> before, after;
    auto check = [&](const std::vector<long> &p) {
        ++out.points_checked;
        model.apply_into(p, image);
        class_sizes(p, scratch, before);
        class_sizes(image, scratch, after);
        if (before == after)
            return true;
        out.preserved = false;
        out.counterexample = p;
        return false;
    };
    if (!sampling) {
        point_count(model.group_order(), model.factors());
        for_each_point(model.group_order(), model.factors(), check);
    } else {
        std::mt19937_64 rng(sampling->seed);
        std::uniform_int_distribution<long> coord(0, model.group_order() - 1);
        std::vector<long> p(model.factors());
        for (std::uint64_t i = 0; i < sampling->count; ++i) {
            for (auto &g : p)
                g = coord(rng);
            if (!check(p))
                break;
        }
    }
    if (out.counterexample &&
        multiplicity_partition(model.apply(*out.counterexample)) == multiplicity_partition(*out.counterexample))
        throw InvariantViolation("class-size comparison disagrees with multiplicity_partition");
    return out;
}

KernelResult kernel_triviality_check(long m, unsigned r, unsigned n) {
    if (n < 2)
        throw ParameterError("need n >= 2");
    KernelResult out{m, r, n, {}, {}, {}};
    out.expected.emplace_back(1, 0);
    if (n == 2)
        out.expected.emplace_back(0, 1);
    std::sort(out.expected.begin(), out.expected.end());
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            if (!FiniteModel::is_valid(m, n, x, y))
                continue;
            const FiniteModel model(m, r, n, x, y);
            point_count(model.group_order(), n);
            out.valid_pairs.emplace_back(x, y);
            bool identity = true;
            for_each_point(model.group_order(), n, [&](const std::vector<long> &p) {
                std::vector<long> image = model.apply(p), sorted = p;
                std::sort(image.begin(), image.end());
                std::sort(sorted.begin(), sorted.end());
                identity = image == sorted;
                return identity;
            });
            if (identity)
                out.identity_inducing.emplace_back(x, y);
        }
    std::sort(out.identity_inducing.begin(), out.identity_inducing.end());
    return out;
}

std::optional<std::vector<long>> closure_witness(long group_order, const std::vector<long> &p, const Partition &lam) {
    const Partition tau = multiplicity_partition(p);
    const auto grouping = refinement_grouping(lam, tau);
    if (!grouping || lam.parts().size() > std::size_t(group_order))
        return std::nullopt;
    // Classes of p ordered like tau's parts: by size, ties by value.
    std::map<long, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < p.size(); ++i)
        by_value[p[i]].push_back(i);
    std::vector<std::pair<long, std::vector<std::size_t>>> classes(by_value.begin(), by_value.end());
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto &a, const auto &b) { return a.second.size() > b.second.size(); });
    std::set<long> used(p.begin(), p.end());
    long next_fresh = 0;
    auto fresh = [&] {
        while (used.count(next_fresh))
            ++next_fresh;
        used.insert(next_fresh);
        return next_fresh;
    };
    // Tau's parts and the grouping's blocks are sorted the same way; equal
    // sizes can be matched in any order.
    std::vector<long> q(p);
    for (std::size_t j = 0; j < classes.size(); ++j) {
        const auto &indices = classes[j].second;
        std::size_t pos = 0;
        bool first = true;
        for (std::size_t part : (*grouping)[j]) {
            const long value = first ? classes[j].first : fresh();
            first = false;
            for (unsigned c = 0; c < lam.parts()[part]; ++c)
                q[indices[pos++]] = value;
        }
    }
    if (multiplicity_partition(q) != lam || !collapse_map(q, p))
        throw InvariantViolation("closure witness has the wrong shape");
    return q;
}

std::optional<std::map<long, long>> collapse_map(const std::vector<long> &q, const std::vector<long> &p) {
    if (q.size() != p.size())
        return std::nullopt;
    std::map<long, long> to;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto [it, inserted] = to.emplace(q[i], p[i]);
        if (!inserted && it->second != p[i])
            return std::nullopt;
    }
    return to;
}

} // namespace hilbcert
