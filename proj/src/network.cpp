#include "crn/network.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

void Complex::set(int species, std::int64_t coeff) {
    if (coeff < 0) throw std::invalid_argument("negative stoichiometric coefficient");
    if (coeff == 0)
        terms_.erase(species);
    else
        terms_[species] = coeff;
}

std::int64_t Complex::coeff(int species) const {
    auto it = terms_.find(species);
    return it == terms_.end() ? 0 : it->second;
}

Complex Complex::renumbered(const std::vector<int>& species_map) const {
    Complex out;
    for (const auto& [s, c] : terms_) out.set(species_map.at(static_cast<std::size_t>(s)), c);
    return out;
}

Complex Complex::without(const std::vector<bool>& removed) const {
    Complex out;
    for (const auto& [s, c] : terms_)
        if (!removed.at(static_cast<std::size_t>(s))) out.set(s, c);
    return out;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions) {
    const int n = static_cast<int>(species.size());
    {
        std::set<std::string> seen;
        for (const auto& name : species) {
            if (name.empty()) throw std::invalid_argument("empty species name");
            if (!seen.insert(name).second) throw std::invalid_argument("duplicate species name: " + name);
        }
    }
    for (const auto& r : reactions) {
        for (const auto& c : {r.source, r.target})
            for (const auto& [s, coeff] : c.terms()) {
                (void)coeff;
                if (s < 0 || s >= n) throw std::invalid_argument("complex references unknown species");
            }
        if (r.is_trivial()) throw std::invalid_argument("trivial reaction (source equals target)");
        if (r.rate && *r.rate <= 0) throw std::invalid_argument("rate constant must be positive");
    }

    // Dedup by (source, target), keeping the first occurrence.
    std::vector<Reaction> kept;
    for (const auto& r : reactions) {
        bool dup = false;
        for (const auto& k : kept)
            if (k.source == r.source && k.target == r.target) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(r);
    }

    // Species order: first appearance scanning reactions, source then target.
    std::vector<int> order;  // old indices in appearance order
    std::vector<int> new_index(static_cast<std::size_t>(n), -1);
    for (const auto& r : kept)
        for (const auto* c : {&r.source, &r.target})
            for (const auto& [s, coeff] : c->terms()) {
                (void)coeff;
                if (new_index[static_cast<std::size_t>(s)] < 0) {
                    new_index[static_cast<std::size_t>(s)] = static_cast<int>(order.size());
                    order.push_back(s);
                }
            }

    species_.reserve(order.size());
    for (int old : order) species_.push_back(std::move(species[static_cast<std::size_t>(old)]));
    reactions_.reserve(kept.size());
    for (auto& r : kept)
        reactions_.push_back({r.source.renumbered(new_index), r.target.renumbered(new_index), r.rate});
}

int ReactionNetwork::species_index(const std::string& name) const {
    for (std::size_t i = 0; i < species_.size(); ++i)
        if (species_[i] == name) return static_cast<int>(i);
    return -1;
}

const char* to_string(OpennessTag tag) {
    switch (tag) {
        case OpennessTag::Closed: return "closed";
        case OpennessTag::OpenNoOutflows: return "open-no-outflows";
        case OpennessTag::OpenWithOutflows: return "open-with-outflows";
        case OpennessTag::FullyOpen: return "fully-open";
    }
    return "?";
}

NetworkMatrices build_matrices(const ReactionNetwork& net) {
    const int n = net.species_count();
    const int m = net.reaction_count();
    NetworkMatrices out;
    out.stoichiometric.setZero(n, m);
    out.source.setZero(n, m);
    for (int j = 0; j < m; ++j) {
        const Reaction& r = net.reactions()[static_cast<std::size_t>(j)];
        for (const auto& [s, c] : r.source.terms()) {
            out.source(s, j) = c;
            out.stoichiometric(s, j) -= c;
        }
        for (const auto& [s, c] : r.target.terms()) out.stoichiometric(s, j) += c;
    }
    return out;
}

RationalMatrix stoichiometric_matrix(const ReactionNetwork& net) { return build_matrices(net).stoichiometric; }
RationalMatrix source_matrix(const ReactionNetwork& net) { return build_matrices(net).source; }

Openness classify_openness(const ReactionNetwork& net) {
    Openness out;
    std::set<int> in, outflow;
    for (const auto& r : net.reactions()) {
        if (r.is_inflow()) in.insert(r.target.terms().begin()->first);
        if (r.is_outflow()) outflow.insert(r.source.terms().begin()->first);
    }
    out.inflow_species.assign(in.begin(), in.end());
    out.outflow_species.assign(outflow.begin(), outflow.end());
    const std::size_t n = static_cast<std::size_t>(net.species_count());
    if (in.empty() && outflow.empty())
        out.tag = OpennessTag::Closed;
    else if (in.size() == n && outflow.size() == n)
        out.tag = OpennessTag::FullyOpen;
    else if (outflow.empty())
        out.tag = OpennessTag::OpenNoOutflows;
    else
        out.tag = OpennessTag::OpenWithOutflows;
    return out;
}

RationalMatrix conservation_laws(const ReactionNetwork& net) {
    return left_kernel(stoichiometric_matrix(net));
}

int deficiency(const ReactionNetwork& net) {
    std::vector<Complex> complexes;
    auto index_of = [&](const Complex& c) {
        for (std::size_t i = 0; i < complexes.size(); ++i)
            if (complexes[i] == c) return static_cast<int>(i);
        complexes.push_back(c);
        return static_cast<int>(complexes.size() - 1);
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& r : net.reactions()) {
        int a = index_of(r.source);
        int b = index_of(r.target);
        edges.emplace_back(a, b);
    }
    // Linkage classes: connected components of the undirected complex graph.
    std::vector<int> parent(complexes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    for (auto [a, b] : edges) parent[static_cast<std::size_t>(find(a))] = find(b);
    std::set<int> roots;
    for (std::size_t i = 0; i < complexes.size(); ++i) roots.insert(find(static_cast<int>(i)));
    int r = rank(stoichiometric_matrix(net));
    return static_cast<int>(complexes.size()) - static_cast<int>(roots.size()) - r;
}

bool same_compatibility_class(const ReactionNetwork& net, const RationalVector& x, const RationalVector& y) {
    if (x.rows() != net.species_count() || y.rows() != net.species_count())
        throw std::invalid_argument("state dimension does not match species count");
    return in_column_span(stoichiometric_matrix(net), y - x);
}

}  // namespace crn
