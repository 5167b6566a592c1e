#include "crn/cst.hpp"

#include <algorithm>
#include <set>

#include "crn/parse.hpp"

namespace crn {

int CstStructure::s_count() const {
    return static_cast<int>(std::count(kinds.begin(), kinds.end(), ReactionKind::Sequestration));
}

int CstStructure::t_count() const { return n() - s_count(); }

Integer CstStructure::prod_a() const {
    Integer p = 1;
    for (auto v : a) p *= v;
    return p;
}

Integer CstStructure::prod_b() const {
    Integer p = 1;
    for (auto v : b) p *= v;
    return p;
}

std::string CstStructure::kinds_string() const {
    std::string out;
    for (auto k : kinds) out += static_cast<char>(k);
    return out;
}

namespace {

struct Edge {
    int head = 0, tail = 0;
    std::int64_t head_coeff = 0, tail_coeff = 0;
};

// Orientation search: transmutations are directed, each sequestration may run
// either way; a valid assignment gives every species one outgoing and one
// incoming edge forming a single cycle.
bool assign(const std::vector<std::vector<Edge>>& options, std::size_t depth, std::vector<Edge>& chosen,
            std::vector<bool>& head_used, std::vector<bool>& tail_used) {
    if (depth == options.size()) {
        const int n = static_cast<int>(chosen.size());
        std::vector<int> from(head_used.size(), -1);
        for (int i = 0; i < n; ++i) from[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)].head)] = i;
        // All heads are distinct, so the edges form disjoint cycles; accept
        // only when the cycle through the first head has full length n.
        const int start = chosen[0].head;
        int at = start, steps = 0;
        do {
            int e = from[static_cast<std::size_t>(at)];
            if (e < 0) return false;
            at = chosen[static_cast<std::size_t>(e)].tail;
            ++steps;
        } while (at != start && steps < n + 1);
        return at == start && steps == n;
    }
    for (const Edge& e : options[depth]) {
        auto h = static_cast<std::size_t>(e.head);
        auto t = static_cast<std::size_t>(e.tail);
        if (head_used[h] || tail_used[t]) continue;
        head_used[h] = tail_used[t] = true;
        chosen.push_back(e);
        if (assign(options, depth + 1, chosen, head_used, tail_used)) return true;
        chosen.pop_back();
        head_used[h] = tail_used[t] = false;
    }
    return false;
}

}  // namespace

std::optional<CstStructure> recognize_cst(const ReactionNetwork& net, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return std::nullopt;
    };

    Openness openness = classify_openness(net);
    std::vector<int> core;
    for (int j = 0; j < net.reaction_count(); ++j)
        if (!net.reactions()[static_cast<std::size_t>(j)].is_flow()) core.push_back(j);

    std::set<int> cycle_species;
    for (int j : core) {
        const Reaction& r = net.reactions()[static_cast<std::size_t>(j)];
        for (const auto* c : {&r.source, &r.target})
            for (const auto& [s, coeff] : c->terms()) {
                (void)coeff;
                cycle_species.insert(s);
            }
    }
    for (int s = 0; s < net.species_count(); ++s)
        if (!cycle_species.count(s))
            return fail("species appears only in flow reactions: " + net.species_name(s));

    const int n = static_cast<int>(cycle_species.size());
    if (n < 2) return fail("a cycle needs at least two species");
    if (static_cast<int>(core.size()) != n)
        return fail("expected exactly one non-flow reaction per species (" + std::to_string(n) +
                    " species, " + std::to_string(core.size()) + " reactions)");

    std::vector<std::vector<Edge>> options;
    std::vector<ReactionKind> edge_kind;
    for (int j : core) {
        const Reaction& r = net.reactions()[static_cast<std::size_t>(j)];
        std::vector<Edge> opts;
        if (r.target.empty() && r.source.terms().size() == 2) {
            auto it = r.source.terms().begin();
            auto [s1, c1] = *it++;
            auto [s2, c2] = *it;
            opts.push_back({s1, s2, c1, c2});
            opts.push_back({s2, s1, c2, c1});
            edge_kind.push_back(ReactionKind::Sequestration);
        } else if (r.source.terms().size() == 1 && r.target.terms().size() == 1 &&
                   r.source.terms().begin()->first != r.target.terms().begin()->first) {
            opts.push_back({r.source.terms().begin()->first, r.target.terms().begin()->first,
                            r.source.terms().begin()->second, r.target.terms().begin()->second});
            edge_kind.push_back(ReactionKind::Transmutation);
        } else {
            return fail("not a sequestration or transmutation: " + format_reaction(net, r));
        }
        options.push_back(std::move(opts));
    }

    std::vector<Edge> chosen;
    std::vector<bool> head_used(static_cast<std::size_t>(net.species_count()), false);
    std::vector<bool> tail_used(head_used.size(), false);
    if (!assign(options, 0, chosen, head_used, tail_used))
        return fail("reactions do not form a single cycle");

    // Walk the cycle from the lexicographically smallest species name.
    std::vector<int> edge_of_head(static_cast<std::size_t>(net.species_count()), -1);
    for (std::size_t e = 0; e < chosen.size(); ++e)
        edge_of_head[static_cast<std::size_t>(chosen[e].head)] = static_cast<int>(e);
    int start = *std::min_element(cycle_species.begin(), cycle_species.end(), [&](int x, int y) {
        return net.species_name(x) < net.species_name(y);
    });

    CstStructure st;
    st.openness = std::move(openness);
    st.species.reserve(static_cast<std::size_t>(n));
    st.kinds.resize(static_cast<std::size_t>(n));
    st.a.resize(static_cast<std::size_t>(n));
    st.b.resize(static_cast<std::size_t>(n));
    st.reaction_index.resize(static_cast<std::size_t>(n));
    int at = start;
    for (int i = 0; i < n; ++i) {
        int e = edge_of_head[static_cast<std::size_t>(at)];
        const Edge& edge = chosen[static_cast<std::size_t>(e)];
        st.species.push_back(net.species_name(at));
        st.kinds[static_cast<std::size_t>(i)] = edge_kind[static_cast<std::size_t>(e)];
        st.a[static_cast<std::size_t>(i)] = edge.head_coeff;
        st.b[static_cast<std::size_t>((i + 1) % n)] = edge.tail_coeff;
        st.reaction_index[static_cast<std::size_t>(i)] = core[static_cast<std::size_t>(e)];
        at = edge.tail;
    }
    return st;
}

bool is_sequestration_network(const CstStructure& st) {
    if (st.t_count() != 1) return false;
    int trans = 0;
    for (int i = 0; i < st.n(); ++i)
        if (st.kinds[static_cast<std::size_t>(i)] == ReactionKind::Transmutation) trans = i;
    for (int i = 0; i < st.n(); ++i) {
        if (st.a[static_cast<std::size_t>(i)] != 1) return false;
        if (i != (trans + 1) % st.n() && st.b[static_cast<std::size_t>(i)] != 1) return false;
    }
    return true;
}

CstStructure rotated(const CstStructure& st, int offset) {
    const int n = st.n();
    if (n == 0) return st;
    offset = ((offset % n) + n) % n;
    CstStructure out;
    out.openness = st.openness;
    out.species.resize(static_cast<std::size_t>(n));
    out.kinds.resize(static_cast<std::size_t>(n));
    out.a.resize(static_cast<std::size_t>(n));
    out.b.resize(static_cast<std::size_t>(n));
    out.reaction_index.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int j = (i + offset) % n;
        out.species[static_cast<std::size_t>(i)] = st.species[static_cast<std::size_t>(j)];
        out.kinds[static_cast<std::size_t>(i)] = st.kinds[static_cast<std::size_t>(j)];
        out.a[static_cast<std::size_t>(i)] = st.a[static_cast<std::size_t>(j)];
        out.b[static_cast<std::size_t>(i)] = st.b[static_cast<std::size_t>(j)];
        out.reaction_index[static_cast<std::size_t>(i)] = st.reaction_index[static_cast<std::size_t>(j)];
    }
    return out;
}

namespace {

ReactionNetwork build(const CstStructure& st, const std::vector<int>& flow_positions) {
    const int n = st.n();
    std::vector<Reaction> reactions;
    for (int i = 0; i < n; ++i) {
        int next = (i + 1) % n;
        Reaction r;
        r.source.set(i, st.a[static_cast<std::size_t>(i)]);
        if (st.kinds[static_cast<std::size_t>(i)] == ReactionKind::Sequestration)
            r.source.set(next, st.b[static_cast<std::size_t>(next)]);
        else
            r.target.set(next, st.b[static_cast<std::size_t>(next)]);
        reactions.push_back(std::move(r));
    }
    for (int p : flow_positions) {
        Reaction out;
        out.source.set(p, 1);
        reactions.push_back(std::move(out));
    }
    for (int p : flow_positions) {
        Reaction in;
        in.target.set(p, 1);
        reactions.push_back(std::move(in));
    }
    return ReactionNetwork(st.species, std::move(reactions));
}

}  // namespace

ReactionNetwork core_network(const CstStructure& st) { return build(st, {}); }

ReactionNetwork with_flows(const CstStructure& st, const std::vector<int>& flow_positions) {
    return build(st, flow_positions);
}

ReactionNetwork fully_open_network(const CstStructure& st) {
    std::vector<int> all(static_cast<std::size_t>(st.n()));
    for (int i = 0; i < st.n(); ++i) all[static_cast<std::size_t>(i)] = i;
    return build(st, all);
}

const char* to_string(Multistationarity m) {
    switch (m) {
        case Multistationarity::Yes: return "yes";
        case Multistationarity::No: return "no";
        case Multistationarity::Unknown: return "unknown";
        case Multistationarity::NotApplicable: return "not-applicable";
    }
    return "?";
}

CstVerdict classify_cst(const CstStructure& st) {
    const int n = st.n();
    const int s = st.s_count();
    const Integer pa = st.prod_a();
    const Integer pb = st.prod_b();
    const bool s_even = s % 2 == 0;

    CstVerdict v;
    switch (st.openness.tag) {
        case OpennessTag::Closed:
        case OpennessTag::OpenNoOutflows: {
            bool noninjective_general = (s == n) && (n % 2 == 0) && pa != pb;
            v.injective_general = !noninjective_general;
            v.injective_mass_action = true;
            v.multistationary = Multistationarity::NotApplicable;
            v.rule = noninjective_general
                         ? "no-outflow cycle: all-sequestration even cycle with unequal products"
                         : "no-outflow cycle: injective";
            return v;
        }
        case OpennessTag::OpenWithOutflows:
        case OpennessTag::FullyOpen:
            break;
    }

    v.injective_mass_action = (n == s) || !s_even || pa >= pb;
    v.injective_general =
        !s_even || (s == n ? pa == pb : /* s even, s < n */ pa >= pb);

    if (v.injective_mass_action) {
        v.multistationary = Multistationarity::No;
        v.rule = (n == s)   ? "outflow cycle: injective (all sequestrations)"
                 : !s_even  ? "outflow cycle: injective (odd sequestration count)"
                            : "outflow cycle: injective (consumption products dominate)";
        return v;
    }

    // Not injective under mass action: s even, s < n, prod a < prod b.
    if (st.openness.tag == OpennessTag::OpenWithOutflows) {
        v.multistationary = Multistationarity::Unknown;
        v.rule = "outflow cycle: not injective; multistationarity undetermined when only part of the species flow";
        return v;
    }
    if (s > 0) {
        v.multistationary = Multistationarity::Yes;
        v.rule = "fully open cycle: sequestrations present, degenerate-direction certificate applies";
    } else if (std::any_of(st.a.begin(), st.a.end(), [](std::int64_t x) { return x > 1; })) {
        v.multistationary = Multistationarity::Yes;
        v.nondegenerate = true;
        v.rule = "fully open cycle: nonlinear transmutation cycle, explicit two-state witness applies";
    } else {
        v.multistationary = Multistationarity::No;
        v.rule = "fully open cycle: linear transmutation cycle, unique equilibrium";
    }
    return v;
}

}  // namespace crn
