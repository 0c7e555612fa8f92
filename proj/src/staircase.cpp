#include "hilb/staircase.hpp"

#include <algorithm>

#include "hilb/errors.hpp"

namespace hilb {

StaircaseDiagram StaircaseDiagram::from_heights(const std::vector<int>& heights) {
    for (size_t i = 0; i < heights.size(); ++i) {
        if (heights[i] <= 0) throw InputError("staircase heights must be positive");
        if (i > 0 && heights[i] > heights[i - 1])
            throw InputError("staircase heights must be weakly decreasing");
    }
    StaircaseDiagram d;
    const int width = static_cast<int>(heights.size());
    for (int s = 0; s < width; ++s)
        for (int t = 0; t < heights[static_cast<size_t>(s)]; ++t) d.boxes_.emplace_back(s, t);

    // generators where the height strictly drops (treat h_{-1} as infinity,
    // h_width as 0)
    for (int s = 0; s <= width; ++s) {
        const int h = s < width ? heights[static_cast<size_t>(s)] : 0;
        const int prev = s > 0 ? heights[static_cast<size_t>(s) - 1] : -1; // -1 == infinity
        if (s == 0 || h < prev) d.gens_.emplace_back(s, h);
    }
    std::sort(d.gens_.begin(), d.gens_.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t i = 0; i + 1 < d.gens_.size(); ++i)
        d.rels_.emplace_back(std::max(d.gens_[i].first, d.gens_[i + 1].first),
                             std::max(d.gens_[i].second, d.gens_[i + 1].second));

    std::sort(d.boxes_.begin(), d.boxes_.end());
    return d;
}

StaircaseDiagram StaircaseDiagram::from_ideal(const Ideal& ideal) {
    if (ideal.ring()->var_count() != 2)
        throw InputError("staircase diagrams need a 2-variable ring");
    if (!ideal.is_monomial_ideal())
        throw InputError("staircase diagrams need a monomial ideal");

    std::vector<Monomial> ms;
    for (const auto& g : ideal.generators()) ms.push_back(g.terms().begin()->first);
    ms = minimal_monomial_generators(std::move(ms));
    if (ms.empty()) throw InputError("staircase of the zero ideal has infinite colength");

    int pure0 = -1, pure1 = -1; // exponents of pure powers var0^a, var1^b
    for (const auto& m : ms) {
        if (m[1] == 0) pure0 = m[0];
        if (m[0] == 0) pure1 = m[1];
    }
    if (pure0 < 0 || pure1 < 0)
        throw InputError("staircase requires finite colength "
                         "(pure power of each variable)");

    std::vector<int> heights;
    for (int s = 0; s < pure0; ++s) {
        int h = pure1;
        for (const auto& m : ms)
            if (m[0] <= s) h = std::min(h, m[1]);
        if (h == 0) break;
        heights.push_back(h);
    }
    return from_heights(heights);
}

long StaircaseDiagram::lambda(long a) const {
    return std::count_if(boxes_.begin(), boxes_.end(),
                         [a](const auto& b) { return b.first + b.second == a; });
}

long StaircaseDiagram::mu(long a) const {
    return std::count_if(gens_.begin(), gens_.end(),
                         [a](const auto& g) { return g.first + g.second == a; });
}

long StaircaseDiagram::rho(long a) const {
    return std::count_if(rels_.begin(), rels_.end(),
                         [a](const auto& r) { return r.first + r.second == a; });
}

long StaircaseDiagram::max_box_degree() const {
    long best = -1;
    for (const auto& b : boxes_) best = std::max(best, static_cast<long>(b.first + b.second));
    return best;
}

long StaircaseDiagram::hom_positive() const {
    const long top = max_box_degree();
    auto tail = [&](long from) {
        long sum = 0;
        for (long a = from + 1; a <= top; ++a) sum += lambda(a);
        return sum;
    };
    long total = 0;
    for (const auto& g : gens_) total += tail(g.first + g.second);
    for (const auto& r : rels_) total -= tail(r.first + r.second);
    return total;
}

long StaircaseDiagram::extended_tangent_dim() const {
    return 2 * colength() - hom_positive();
}

Ideal StaircaseDiagram::to_ideal(const RingPtr& ring) const {
    if (ring->var_count() != 2)
        throw InputError("staircase ideals live in a 2-variable ring");
    std::vector<Polynomial> gens;
    gens.reserve(gens_.size());
    for (const auto& [s, t] : gens_)
        gens.push_back(Polynomial::term(ring, Monomial({s, t}), Rational(1)));
    return Ideal(ring, std::move(gens));
}

std::string StaircaseDiagram::render() const {
    int max_s = 0, max_t = 0;
    for (const auto& g : gens_) {
        max_s = std::max(max_s, g.first);
        max_t = std::max(max_t, g.second);
    }
    for (const auto& r : rels_) {
        max_s = std::max(max_s, r.first);
        max_t = std::max(max_t, r.second);
    }
    std::string out;
    for (int t = max_t; t >= 0; --t) {
        for (int s = 0; s <= max_s; ++s) {
            char c = '.';
            const std::pair<int, int> cell{s, t};
            if (std::binary_search(boxes_.begin(), boxes_.end(), cell)) c = '#';
            for (const auto& g : gens_)
                if (g == cell) c = 'o';
            for (const auto& r : rels_)
                if (r == cell) c = '*';
            out += c;
            if (s < max_s) out += ' ';
        }
        out += '\n';
    }
    return out;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}
} // namespace

std::vector<StaircaseDiagram> enumerate_staircases(int r) {
    if (r < 1) throw InputError("colength must be positive");
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions_rec(r, r, current, parts);
    std::vector<StaircaseDiagram> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(StaircaseDiagram::from_heights(p));
    return out;
}

} // namespace hilb
