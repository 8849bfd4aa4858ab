#pragma once
// Independent automaton oracle for lexicographic subshifts: follower
// automaton over the two eventually periodic bounds, exact word counting
// (paths and definitional backtracking), strongly connected components with
// certified Perron entropy, the Parry measure of maximal entropy, and the
// component-level intrinsic-ergodicity verdict.

#include "lexishift/seq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace lexishift {

// State k tracks the pair (i, j): the current comparison positions in the
// digit streams of alpha (upper bound) and beta (lower bound) for the
// longest suffixes of the word read so far that exactly match a prefix of
// the respective stream. Positions inside the periodic tails are normalised
// modulo the period, which keeps the state set finite. Transitions that push
// a tight suffix above alpha or below beta are forbidden (absent). States
// are kept untrimmed: non-recurrent states still carry finite-word counts.
struct Automaton {
    std::vector<std::array<int, 2>> next;     // next[k][symbol], -1 = forbidden
    std::vector<std::pair<int, int>> labels;  // (i, j) follower positions
    int start = 0;

    std::size_t size() const { return next.size(); }
};

// Soundness of the single-match tracker rests on the bounds being Parry
// sequences (guaranteed by admissibility): if a tight match against alpha
// breaks strictly below, no shorter suffix can still match a prefix of
// alpha — otherwise some shift of alpha would exceed alpha. Mirrored for
// beta. Hence one position per bound suffices.
inline Automaton build_automaton(const EPSeq& alpha, const EPSeq& beta) {
    require_admissible(alpha, beta);
    const std::size_t ua = alpha.pre.size(), va = alpha.per.size();
    const std::size_t ub = beta.pre.size(), vb = beta.per.size();
    auto norm_a = [&](std::size_t i) { return i < ua + va ? i : ua + (i - ua) % va; };
    auto norm_b = [&](std::size_t j) { return j < ub + vb ? j : ub + (j - ub) % vb; };

    Automaton a;
    std::map<std::pair<int, int>, int> index;
    auto intern = [&](int i, int j) {
        auto [it, fresh] = index.try_emplace({i, j}, static_cast<int>(a.next.size()));
        if (fresh) {
            a.next.push_back({-1, -1});
            a.labels.emplace_back(i, j);
        }
        return it->second;
    };
    intern(0, 0);
    for (std::size_t k = 0; k < a.next.size(); ++k) {
        auto [i, j] = a.labels[k];
        for (int c = 0; c <= 1; ++c) {
            char cc = static_cast<char>('0' + c);
            char ad = alpha.at(static_cast<std::size_t>(i));
            char bd = beta.at(static_cast<std::size_t>(j));
            if (cc > ad || cc < bd) continue;
            int ni = (cc == ad) ? static_cast<int>(norm_a(static_cast<std::size_t>(i) + 1)) : 0;
            int nj = (cc == bd) ? static_cast<int>(norm_b(static_cast<std::size_t>(j) + 1)) : 0;
            int target = intern(ni, nj);
            a.next[k][c] = target;
        }
    }
    return a;
}

// Exact |B_n|: number of n-step paths from the start state. A word is
// counted iff no suffix has yet violated a bound, which is exactly the
// finite-word admissibility condition.
inline unsigned long long count_words(const Automaton& a, std::size_t n) {
    if (n < 1 || n > 60) fail("DomainError", "word counting is supported for 1 <= n <= 60");
    std::vector<unsigned long long> cur(a.size(), 0), nxt;
    cur[static_cast<std::size_t>(a.start)] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        nxt.assign(a.size(), 0);
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (!cur[s]) continue;
            for (int c = 0; c <= 1; ++c)
                if (int t = a.next[s][c]; t >= 0) nxt[static_cast<std::size_t>(t)] += cur[s];
        }
        cur.swap(nxt);
    }
    unsigned long long total = 0;
    for (unsigned long long v : cur) total += v;
    return total;
}

inline unsigned long long count_words(const EPSeq& alpha, const EPSeq& beta, std::size_t n) {
    return count_words(build_automaton(alpha, beta), n);
}

// Definitional cross-check, independent of the automaton: depth-first
// enumeration applying "beta-prefix <= suffix <= alpha-prefix" to every
// suffix of the word, with tight-match bookkeeping undone on backtrack.
inline unsigned long long count_words_enumerative(const EPSeq& alpha, const EPSeq& beta,
                                                  std::size_t n) {
    require_admissible(alpha, beta);
    if (n < 1 || n > 32) fail("DomainError", "enumerative counting is supported for 1 <= n <= 32");
    enum : uint8_t { TIGHT_A, TIGHT_B, FREE };
    struct Suffix {
        uint8_t status;
        std::size_t m;  // matched length against its bound's stream
    };
    std::vector<Suffix> suffixes;
    suffixes.reserve(n);
    unsigned long long count = 0;

    auto go = [&](auto&& self, std::size_t len) -> void {
        if (len == n) {
            ++count;
            return;
        }
        for (char c : {'0', '1'}) {
            bool ok = true;
            for (const Suffix& sf : suffixes) {
                if (sf.status == TIGHT_A && c > alpha.at(sf.m)) { ok = false; break; }
                if (sf.status == TIGHT_B && c < beta.at(sf.m)) { ok = false; break; }
            }
            if (!ok) continue;
            std::vector<std::pair<std::size_t, Suffix>> undo;
            for (std::size_t s = 0; s < suffixes.size(); ++s) {
                Suffix& sf = suffixes[s];
                if (sf.status == TIGHT_A) {
                    undo.emplace_back(s, sf);
                    if (c == alpha.at(sf.m)) ++sf.m;
                    else sf.status = FREE;
                } else if (sf.status == TIGHT_B) {
                    undo.emplace_back(s, sf);
                    if (c == beta.at(sf.m)) ++sf.m;
                    else sf.status = FREE;
                }
            }
            // new suffix of length 1: alpha starts with 1, beta with 0
            suffixes.push_back(c == '1' ? Suffix{TIGHT_A, 1} : Suffix{TIGHT_B, 1});
            self(self, len + 1);
            suffixes.pop_back();
            for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                suffixes[it->first] = it->second;
        }
    };
    go(go, 0);
    return count;
}

struct ComponentReport {
    int id = 0;
    std::vector<int> states;  // automaton state indices, ascending
    double perron_entropy_bits = 0.0;
    bool is_trivial_cycle = false;
    double entropy_lo = 0.0, entropy_hi = 0.0;  // certified bracket
};

namespace detail {

// Iterative Tarjan SCC; returns component index per state (-1 = none yet).
inline std::vector<std::vector<int>> strongly_connected(const Automaton& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> index(n, -1), low(n, 0), stck;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> sccs;
    int counter = 0;
    struct Frame {
        int v;
        int edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stck.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < 2) {
                int w = a.next[static_cast<std::size_t>(f.v)][f.edge++];
                if (w < 0) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stck.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    for (;;) {
                        int w = stck.back();
                        stck.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    sccs.push_back(std::move(comp));
                }
            }
        }
    }
    return sccs;
}

struct PerronData {
    double lambda = 1.0, lo = 1.0, hi = 1.0;
    std::vector<double> right, left;
};

// Power iteration on (A + I) restricted to one SCC, with Collatz-Wielandt
// brackets: for any positive x, min_i (Mx)_i/x_i <= lambda(M) <= max_i.
inline PerronData perron(const std::vector<std::vector<int>>& adj) {
    const std::size_t m = adj.size();
    std::vector<std::vector<int>> radj(m);
    for (std::size_t s = 0; s < m; ++s)
        for (int t : adj[s]) radj[static_cast<std::size_t>(t)].push_back(static_cast<int>(s));
    auto iterate = [&](const std::vector<std::vector<int>>& g, double* lo_out, double* hi_out) {
        std::vector<double> x(m, 1.0), y(m);
        double lo = 0, hi = 0;
        for (int it = 0; it < 400000; ++it) {
            lo = 1e300;
            hi = 0;
            double sum = 0;
            for (std::size_t s = 0; s < m; ++s) {
                double acc = x[s];  // the +I term
                for (int t : g[s]) acc += x[static_cast<std::size_t>(t)];
                y[s] = acc;
                double ratio = acc / x[s];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                sum += acc;
            }
            for (std::size_t s = 0; s < m; ++s) x[s] = y[s] / sum;
            if (hi - lo < 1e-11 * lo) break;
        }
        *lo_out = lo;
        *hi_out = hi;
        return x;
    };
    PerronData p;
    double lo = 0, hi = 0;
    p.right = iterate(adj, &lo, &hi);
    p.lambda = (lo + hi) / 2.0 - 1.0;
    p.lo = lo - 1.0;
    p.hi = hi - 1.0;
    double llo = 0, lhi = 0;
    p.left = iterate(radj, &llo, &lhi);
    return p;
}

}  // namespace detail

// Maximal strongly connected subgraphs containing at least one edge, sorted
// by Perron entropy descending. A single cycle has entropy exactly 0.
inline std::vector<ComponentReport> components(const Automaton& a) {
    std::vector<ComponentReport> out;
    for (auto& comp : detail::strongly_connected(a)) {
        bool has_edge = comp.size() > 1;
        if (!has_edge) {
            int v = comp[0];
            for (int c = 0; c <= 1; ++c)
                if (a.next[static_cast<std::size_t>(v)][c] == v) has_edge = true;
        }
        if (!has_edge) continue;

        std::map<int, int> local;
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(comp.size());
        bool all_single = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (int c = 0; c <= 1; ++c) {
                int t = a.next[static_cast<std::size_t>(comp[i])][c];
                if (t >= 0 && local.count(t)) adj[i].push_back(local[t]);
            }
            if (adj[i].size() != 1) all_single = false;
        }
        ComponentReport rep;
        rep.states = comp;
        rep.is_trivial_cycle = all_single;
        if (!all_single) {
            auto p = detail::perron(adj);
            rep.perron_entropy_bits = std::log2(p.lambda);
            rep.entropy_lo = std::max(0.0, std::log2(std::max(p.lo, 1e-300)));
            rep.entropy_hi = std::log2(p.hi);
        }
        out.push_back(std::move(rep));
    }
    std::sort(out.begin(), out.end(), [](const ComponentReport& x, const ComponentReport& y) {
        if (x.perron_entropy_bits != y.perron_entropy_bits)
            return x.perron_entropy_bits > y.perron_entropy_bits;
        return x.states < y.states;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

struct MaxEntropyMeasure {
    int component_id = 0;
    std::vector<int> states;        // automaton state indices
    std::vector<double> stationary;  // aligned with states
    struct Edge {
        int from = 0, symbol = 0, to = 0;  // from/to are automaton state indices
        double prob = 0.0;
    };
    std::vector<Edge> edges;
    double entropy_bits = 0.0;
};

// Parry measure on one component: edge probabilities r_t / (lambda r_s) from
// the right Perron vector (rows normalised exactly), stationary weights
// l_s r_s from left times right.
inline MaxEntropyMeasure parry_measure(const Automaton& a, int component_id) {
    auto reps = components(a);
    if (component_id < 0 || component_id >= static_cast<int>(reps.size()))
        fail("TrivialComponent",
             "no nontrivial component with id " + std::to_string(component_id));
    const ComponentReport& rep = reps[static_cast<std::size_t>(component_id)];

    std::map<int, int> local;
    for (std::size_t i = 0; i < rep.states.size(); ++i) local[rep.states[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(rep.states.size());
    for (std::size_t i = 0; i < rep.states.size(); ++i)
        for (int c = 0; c <= 1; ++c) {
            int t = a.next[static_cast<std::size_t>(rep.states[i])][c];
            if (t >= 0 && local.count(t)) adj[i].push_back(local[t]);
        }

    MaxEntropyMeasure mu;
    mu.component_id = component_id;
    mu.states = rep.states;
    const std::size_t m = rep.states.size();

    std::vector<double> right(m, 1.0), left(m, 1.0);
    double lambda = 1.0;
    if (!rep.is_trivial_cycle) {
        auto p = detail::perron(adj);
        right = p.right;
        left = p.left;
        lambda = p.lambda;
    }

    double weight = 0;
    mu.stationary.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        mu.stationary[i] = left[i] * right[i];
        weight += mu.stationary[i];
    }
    for (double& w : mu.stationary) w /= weight;

    mu.entropy_bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double row = 0;
        std::vector<MaxEntropyMeasure::Edge> row_edges;
        for (int c = 0; c <= 1; ++c) {
            int t = a.next[static_cast<std::size_t>(rep.states[i])][c];
            if (t < 0 || !local.count(t)) continue;
            double p = right[static_cast<std::size_t>(local[t])] / (lambda * right[i]);
            row_edges.push_back({rep.states[i], c, t, p});
            row += p;
        }
        for (auto& e : row_edges) {
            e.prob /= row;  // exact row-stochastic normalisation
            if (e.prob > 0) mu.entropy_bits += mu.stationary[i] * e.prob * std::log2(1.0 / e.prob);
            mu.edges.push_back(e);
        }
    }
    return mu;
}

enum class IEKind { IntrinsicallyErgodic, NotIntrinsicallyErgodic, ZeroEntropy, TieWithinTolerance };

inline std::string ie_kind_str(IEKind k) {
    switch (k) {
        case IEKind::IntrinsicallyErgodic: return "IntrinsicallyErgodic";
        case IEKind::NotIntrinsicallyErgodic: return "NotIntrinsicallyErgodic";
        case IEKind::ZeroEntropy: return "ZeroEntropy";
        default: return "TieWithinTolerance";
    }
}

struct IEVerdict {
    IEKind kind = IEKind::ZeroEntropy;
    std::vector<int> witnesses;  // component ids: the MME component, or the tied pair
    double max_entropy_bits = 0.0;
    std::string provenance = "oracle";
};

// Component-level verdict: IE iff a unique nontrivial component attains the
// maximal entropy (margin 1e-9) and that entropy is positive. A numerical
// tie is only promoted to NotIE when the caller certifies the symbolic
// family pattern; otherwise it stays TieWithinTolerance.
inline IEVerdict ie_from_components(const std::vector<ComponentReport>& reps,
                                    bool family_certified) {
    IEVerdict v;
    if (reps.empty() || reps[0].perron_entropy_bits < 1e-9) return v;  // ZeroEntropy
    v.max_entropy_bits = reps[0].perron_entropy_bits;
    if (reps.size() == 1 ||
        reps[0].perron_entropy_bits - reps[1].perron_entropy_bits > 1e-9) {
        v.kind = IEKind::IntrinsicallyErgodic;
        v.witnesses = {0};
    } else {
        v.witnesses = {0, 1};
        v.kind = family_certified ? IEKind::NotIntrinsicallyErgodic : IEKind::TieWithinTolerance;
    }
    return v;
}

// Plain-text edge list: one "state symbol state" triple per line.
inline std::string automaton_edge_list(const Automaton& a) {
    std::string out;
    for (std::size_t s = 0; s < a.size(); ++s)
        for (int c = 0; c <= 1; ++c)
            if (int t = a.next[s][c]; t >= 0)
                out += std::to_string(s) + " " + std::to_string(c) + " " + std::to_string(t) + "\n";
    return out;
}

inline std::string automaton_dot(const Automaton& a) {
    std::string out = "digraph follower {\n  rankdir=LR;\n";
    for (std::size_t s = 0; s < a.size(); ++s) {
        auto [i, j] = a.labels[s];
        out += "  s" + std::to_string(s) + " [label=\"(" + std::to_string(i) + "," +
               std::to_string(j) + ")\"];\n";
    }
    for (std::size_t s = 0; s < a.size(); ++s)
        for (int c = 0; c <= 1; ++c)
            if (int t = a.next[s][c]; t >= 0)
                out += "  s" + std::to_string(s) + " -> s" + std::to_string(t) + " [label=\"" +
                       std::to_string(c) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace lexishift
