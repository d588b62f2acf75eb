#ifndef CRPQ_TESTS_WIDTH_ORACLE_HPP
#define CRPQ_TESTS_WIDTH_ORACLE_HPP

// Ground truth for the width measures on tiny queries: exhaustive search over
// small decompositions, and an exact rational LP solver for edge covers.

#include <optional>
#include <set>
#include <vector>

#include "crpq/widths.hpp"

namespace crpq::testsupport {

// All labeled trees on k nodes, from Pruefer sequences.
inline std::vector<std::vector<std::pair<int, int>>> all_trees(int k) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (k == 1) {
        out.push_back({});
        return out;
    }
    std::vector<int> seq(k - 2, 0);
    for (;;) {
        std::vector<int> degree(k, 1);
        for (int s : seq) ++degree[s];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg = degree;
        std::set<int> leaves;
        for (int i = 0; i < k; ++i)
            if (deg[i] == 1) leaves.insert(i);
        std::vector<int> work = seq;
        for (int s : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, s);
            if (--deg[s] == 1) leaves.insert(s);
        }
        auto it = leaves.begin();
        int a = *it++;
        edges.emplace_back(a, *it);
        out.push_back(std::move(edges));
        int i = 0;
        while (i < k - 2 && seq[i] == k - 1) seq[i++] = 0;
        if (i == k - 2) break;
        ++seq[i];
    }
    return out;
}

// Every decomposition made of <= maxBags distinct nonempty variable subsets
// and any tree over them, kept when it is a valid tree decomposition that is
// free-connex (strictly) or the trivial single bag.
template <typename Score>
std::optional<decltype(Score()(Crpq(), TreeDecomposition()))> brute_best_decomposition(
    const Crpq& q, int maxBags, Score score) {
    using Value = decltype(score(q, TreeDecomposition()));
    std::set<std::string> varSet = q.vars();
    std::vector<std::string> vars(varSet.begin(), varSet.end());
    int n = static_cast<int>(vars.size());
    std::vector<std::set<std::string>> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::set<std::string> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.insert(vars[i]);
        subsets.push_back(std::move(s));
    }
    std::optional<Value> best;
    std::vector<int> chosen;
    auto tryCollection = [&]() {
        int k = static_cast<int>(chosen.size());
        TreeDecomposition t;
        for (int c : chosen) t.bags.push_back(subsets[c]);
        for (const auto& edges : all_trees(k)) {
            t.edges = edges;
            if (!is_tree_decomposition(q, t)) continue;
            if (!is_free_connex_decomposition(q, t) &&
                !(k == 1 && t.bags[0] == q.vars()))
                continue;
            Value v = score(q, t);
            if (!best || v < *best) best = v;
        }
    };
    std::function<void(int)> rec = [&](int from) {
        if (!chosen.empty()) tryCollection();
        if (static_cast<int>(chosen.size()) == maxBags) return;
        for (int c = from; c < static_cast<int>(subsets.size()); ++c) {
            chosen.push_back(c);
            rec(c + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return best;
}

inline std::optional<int> brute_cw(const Crpq& q, int maxBags) {
    return brute_best_decomposition(q, maxBags,
                                    [](const Crpq& qq, const TreeDecomposition& t) {
                                        return cw_of_decomposition(qq, t);
                                    });
}

inline std::optional<Rational> brute_fhtw(const Crpq& q, int maxBags) {
    return brute_best_decomposition(q, maxBags,
                                    [](const Crpq& qq, const TreeDecomposition& t) {
                                        Rational m(0);
                                        for (const auto& bag : t.bags) {
                                            Rational r = fractional_edge_cover(qq, bag);
                                            if (m < r) m = r;
                                        }
                                        return m;
                                    });
}

// Exact LP:  min sum(lambda), A lambda >= 1 on f, 0 <= lambda <= 1, by basic
// feasible point enumeration with rational arithmetic.
inline Rational lp_edge_cover(const Crpq& q, const std::set<std::string>& f) {
    if (f.empty()) return Rational(0);
    int m = static_cast<int>(q.atoms.size());
    std::vector<std::string> target(f.begin(), f.end());
    int k = static_cast<int>(target.size());
    // rows: (coefficients, rhs, isUpperBound)
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<bool> upper;
    for (int j = 0; j < k; ++j) {
        std::vector<Rational> row(m, Rational(0));
        for (int i = 0; i < m; ++i) {
            if (q.atoms[i].x == target[j]) row[i] = row[i] + Rational(1);
            if (q.atoms[i].y == target[j] && q.atoms[i].x != q.atoms[i].y)
                row[i] = row[i] + Rational(1);
        }
        rows.push_back(std::move(row));
        rhs.push_back(Rational(1));
        upper.push_back(false);
    }
    for (int i = 0; i < m; ++i) { // lambda_i >= 0
        std::vector<Rational> row(m, Rational(0));
        row[i] = Rational(1);
        rows.push_back(std::move(row));
        rhs.push_back(Rational(0));
        upper.push_back(false);
    }
    for (int i = 0; i < m; ++i) { // lambda_i <= 1
        std::vector<Rational> row(m, Rational(0));
        row[i] = Rational(1);
        rows.push_back(std::move(row));
        rhs.push_back(Rational(1));
        upper.push_back(true);
    }
    int total = static_cast<int>(rows.size());
    std::optional<Rational> best;

    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == m) {
            // solve the m x m system of tight constraints
            std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
            for (int r = 0; r < m; ++r) {
                for (int c = 0; c < m; ++c) a[r][c] = rows[pick[r]][c];
                a[r][m] = rhs[pick[r]];
            }
            for (int col = 0; col < m; ++col) {
                int piv = -1;
                for (int r = col; r < m; ++r)
                    if (a[r][col].num != 0) {
                        piv = r;
                        break;
                    }
                if (piv < 0) return; // singular: not a vertex
                std::swap(a[col], a[piv]);
                for (int r = 0; r < m; ++r) {
                    if (r == col || a[r][col].num == 0) continue;
                    Rational factor = a[r][col] / a[col][col];
                    for (int c = col; c <= m; ++c) a[r][c] = a[r][c] - factor * a[col][c];
                }
            }
            std::vector<Rational> lambda(m);
            for (int i = 0; i < m; ++i) lambda[i] = a[i][m] / a[i][i];
            // feasibility of the candidate point
            Rational obj(0);
            for (int i = 0; i < m; ++i) {
                if (lambda[i] < Rational(0) || Rational(1) < lambda[i]) return;
                obj = obj + lambda[i];
            }
            for (int j = 0; j < k; ++j) {
                Rational cov(0);
                for (int i = 0; i < m; ++i) cov = cov + rows[j][i] * lambda[i];
                if (cov < Rational(1)) return;
            }
            if (!best || obj < *best) best = obj;
            return;
        }
        for (int r = from; r < total; ++r) {
            pick.push_back(r);
            rec(r + 1);
            pick.pop_back();
        }
    };
    rec(0);
    if (!best) throw InvalidArgumentError("lp edge cover: infeasible");
    return *best;
}

} // namespace crpq::testsupport

#endif
