#include "toricode/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "toricode/errors.hpp"

namespace toricode {

std::uint64_t torus_size(std::uint32_t q, std::uint32_t s) {
    std::uint64_t n = 1;
    for (std::uint32_t i = 1; i < s; ++i) {
        if (n > UINT64_MAX / (q - 1))
            throw std::overflow_error("torus size overflows 64 bits");
        n *= q - 1;
    }
    return n;
}

ToricSet::ToricSet(const FiniteField& f, std::uint32_t s,
                   std::vector<ProjectivePoint> points)
    : f_(&f), s_(s), points_(std::move(points)) {
    if (s_ == 0) throw std::invalid_argument("ambient variable count is zero");
    for (auto& p : points_) {
        if (p.size() != s_)
            throw std::invalid_argument("point has " +
                                        std::to_string(p.size()) +
                                        " coordinates, expected " +
                                        std::to_string(s_));
        for (FieldEnc c : p)
            if (c == 0 || c >= f.order())
                throw std::invalid_argument(
                    "torus points need nonzero coordinates below the field "
                    "order");
        FieldEnc scale = f.inv(p.back());
        if (scale != 1)
            for (FieldEnc& c : p) c = f.mul(c, scale);
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool ToricSet::contains(const ProjectivePoint& p) const {
    if (p.size() != s_) return false;
    ProjectivePoint c = p;
    for (FieldEnc x : c)
        if (x == 0 || x >= f_->order()) return false;
    FieldEnc scale = f_->inv(c.back());
    if (scale != 1)
        for (FieldEnc& x : c) x = f_->mul(x, scale);
    return std::binary_search(points_.begin(), points_.end(), c);
}

bool ToricSet::is_complete_intersection() const {
    return size() == torus_size(f_->order(), s_);
}

ToricSet projective_torus(const FiniteField& f, std::uint32_t s,
                          std::uint64_t cap) {
    if (s == 0) throw std::invalid_argument("ambient variable count is zero");
    std::uint64_t total = torus_size(f.order(), s);
    if (total > cap)
        throw CapExceeded("the torus has " + std::to_string(total) +
                          " points; the point cap is " + std::to_string(cap));
    std::vector<ProjectivePoint> pts;
    pts.reserve(total);
    ProjectivePoint cur(s, 1);
    for (std::uint64_t i = 0; i < total; ++i) {
        pts.push_back(cur);
        // Odometer on the first s-1 coordinates, encodings 1..q-1, last
        // position fastest so points come out in ascending lex order.
        for (std::uint32_t j = s - 1; j-- > 0;) {
            if (++cur[j] < f.order()) break;
            cur[j] = 1;
        }
    }
    return ToricSet(f, s, std::move(pts));
}

ToricSet toric_set_from_exponents(const FiniteField& f,
                                  const std::vector<ExponentVector>& exponents,
                                  std::uint64_t cap) {
    if (exponents.empty())
        throw std::invalid_argument("no parameterizing monomials given");
    std::size_t n = exponents[0].size();
    for (const auto& e : exponents)
        if (e.size() != n)
            throw std::invalid_argument(
                "parameterizing monomials use differing variable counts");
    if (n == 0)
        throw std::invalid_argument("parameterizing monomials have no "
                                    "variables");
    std::uint32_t q = f.order();
    std::uint32_t s = std::uint32_t(exponents.size());

    std::uint64_t work = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (work > UINT64_MAX / (q - 1)) {
            work = UINT64_MAX;
            break;
        }
        work *= q - 1;
    }
    if (work > cap) {
        std::string count = work == UINT64_MAX ? "more than 2^63"
                                               : std::to_string(work);
        throw CapExceeded("enumerating the parameter domain needs " +
                          std::to_string(q - 1) + "^" + std::to_string(n) +
                          " = " + count + " tuples; the point cap is " +
                          std::to_string(cap));
    }

    // Exponents only matter mod q-1 because parameters are nonzero.
    std::vector<std::vector<std::uint32_t>> amod(s,
                                                 std::vector<std::uint32_t>(n));
    for (std::uint32_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n; ++i)
            amod[j][i] = exponents[j][i] % (q - 1);

    // Walk the parameter tuples by their discrete logs e in {0..q-2}^n and
    // keep the coordinate logs dots[j] = <a_j, e> mod q-1 incrementally:
    // stepping digit i (including a wrap, since -(q-2) = 1 mod q-1) adds
    // a_j[i] to every dot.
    std::set<ProjectivePoint> seen;
    std::vector<std::uint32_t> e(n, 0);
    std::vector<std::uint32_t> dots(s, 0);
    ProjectivePoint pt(s);
    for (std::uint64_t step = 0;; ++step) {
        std::uint32_t last = dots[s - 1];
        for (std::uint32_t j = 0; j < s; ++j) {
            std::uint32_t d = dots[j] + (q - 1) - last;
            if (d >= q - 1) d -= q - 1;
            pt[j] = f.alog(d);
        }
        seen.insert(pt);
        std::size_t i = 0;
        for (; i < n; ++i) {
            for (std::uint32_t j = 0; j < s; ++j) {
                dots[j] += amod[j][i];
                if (dots[j] >= q - 1) dots[j] -= q - 1;
            }
            if (++e[i] < q - 1) break;
            e[i] = 0;
        }
        if (i == n) break;
    }
    return ToricSet(f, s,
                    std::vector<ProjectivePoint>(seen.begin(), seen.end()));
}

namespace {

std::string edge_text(const std::vector<std::uint32_t>& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

}  // namespace

Clutter::Clutter(std::uint32_t n_vertices,
                 std::vector<std::vector<std::uint32_t>> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ == 0) throw std::invalid_argument("clutter has no vertices");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty())
            throw std::invalid_argument("edge " + std::to_string(i + 1) +
                                        " is empty");
        std::sort(e.begin(), e.end());
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 1 || e[j] > n_)
                throw std::invalid_argument(
                    "edge " + std::to_string(i + 1) + " has vertex " +
                    std::to_string(e[j]) + " outside 1.." +
                    std::to_string(n_));
            if (j && e[j] == e[j - 1])
                throw std::invalid_argument("edge " + std::to_string(i + 1) +
                                            " repeats vertex " +
                                            std::to_string(e[j]));
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            const auto &a = edges_[i], &b = edges_[j];
            if (a == b)
                throw std::invalid_argument("edges " + edge_text(a) + " and " +
                                            edge_text(b) + " are identical");
            if (std::includes(b.begin(), b.end(), a.begin(), a.end()) ||
                std::includes(a.begin(), a.end(), b.begin(), b.end()))
                throw std::invalid_argument("edges " + edge_text(a) + " and " +
                                            edge_text(b) +
                                            " violate the clutter property: "
                                            "one contains the other");
        }
    }
}

std::vector<ExponentVector> Clutter::incidence_exponents() const {
    std::vector<ExponentVector> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        ExponentVector a(n_, 0);
        for (std::uint32_t v : e) a[v - 1] = 1;
        out.push_back(std::move(a));
    }
    return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>>
Clutter::complete_bipartite_shape() const {
    if (n_ < 2 || edges_.empty()) return std::nullopt;
    for (const auto& e : edges_)
        if (e.size() != 2) return std::nullopt;
    std::vector<std::set<std::uint32_t>> adj(n_ + 1);
    for (const auto& e : edges_) {
        adj[e[0]].insert(e[1]);
        adj[e[1]].insert(e[0]);
    }
    const std::set<std::uint32_t>& side_b = adj[1];
    if (side_b.empty()) return std::nullopt;
    const std::set<std::uint32_t>& side_a = adj[*side_b.begin()];
    for (std::uint32_t v : side_a)
        if (side_b.count(v)) return std::nullopt;
    if (side_a.size() + side_b.size() != n_) return std::nullopt;
    if (edges_.size() != std::size_t(side_a.size()) * side_b.size())
        return std::nullopt;
    std::set<std::vector<std::uint32_t>> have(edges_.begin(), edges_.end());
    for (std::uint32_t a : side_a)
        for (std::uint32_t b : side_b) {
            std::vector<std::uint32_t> e{std::min(a, b), std::max(a, b)};
            if (!have.count(e)) return std::nullopt;
        }
    return std::make_pair(std::uint32_t(side_a.size()),
                          std::uint32_t(side_b.size()));
}

ToricSet toric_set_from_clutter(const FiniteField& f, const Clutter& c,
                                std::uint64_t cap) {
    if (c.edge_count() == 0)
        throw std::invalid_argument("clutter has no edges to parameterize "
                                    "with");
    return toric_set_from_exponents(f, c.incidence_exponents(), cap);
}

Clutter parse_clutter(const std::string& text) {
    std::vector<std::vector<std::uint32_t>> edges;
    std::uint32_t max_v = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::vector<std::uint32_t> edge;
        std::size_t i = 0;
        while (i < part.size()) {
            while (i < part.size() && std::isspace(unsigned(part[i]))) ++i;
            std::size_t start = i;
            while (i < part.size() && !std::isspace(unsigned(part[i]))) ++i;
            if (i == start) break;
            std::string tok = part.substr(start, i - start);
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 1 || v > 0xffffffffUL)
                throw std::invalid_argument("cannot parse vertex '" + tok +
                                            "'");
            edge.push_back(std::uint32_t(v));
            max_v = std::max(max_v, std::uint32_t(v));
        }
        edges.push_back(std::move(edge));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (max_v == 0) throw std::invalid_argument("clutter text has no edges");
    return Clutter(max_v, std::move(edges));
}

Clutter single_edge_clutter() { return Clutter(2, {{1, 2}}); }

Clutter triangle_clutter() { return Clutter(3, {{1, 2}, {2, 3}, {1, 3}}); }

Clutter complete_bipartite_clutter(std::uint32_t a, std::uint32_t b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("both vertex classes must be non-empty");
    std::vector<std::vector<std::uint32_t>> edges;
    edges.reserve(std::size_t(a) * b);
    for (std::uint32_t i = 1; i <= a; ++i)
        for (std::uint32_t j = 1; j <= b; ++j)
            edges.push_back({i, a + j});
    return Clutter(a + b, std::move(edges));
}

}
