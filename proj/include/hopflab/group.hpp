#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hopflab {

/// Finite group given by its multiplication table over element indices 0..n-1.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table; // table[i][j] = index of g_i * g_j
    std::vector<std::string> names;
    int identity = 0;
    std::vector<int> inverse;

    int mul(int i, int j) const { return table[i][j]; }

    int power(int i, long e) const {
        int acc = identity;
        long m = e % element_order(i);
        if (m < 0) m += element_order(i);
        for (long k = 0; k < m; ++k) acc = mul(acc, i);
        return acc;
    }

    int element_order(int i) const {
        int acc = i, n = 1;
        while (acc != identity) {
            acc = mul(acc, i);
            ++n;
        }
        return n;
    }

    bool is_central(int i) const {
        for (int j = 0; j < order; ++j)
            if (mul(i, j) != mul(j, i)) return false;
        return true;
    }

    bool is_abelian() const {
        for (int i = 0; i < order; ++i)
            if (!is_central(i)) return false;
        return true;
    }

    std::vector<int> element_order_multiset() const {
        std::vector<int> v(order);
        for (int i = 0; i < order; ++i) v[i] = element_order(i);
        std::sort(v.begin(), v.end());
        return v;
    }

    /// Validates the group axioms on the table; throws InvalidDatum.
    void validate() const {
        require(order >= 1 && int(table.size()) == order, errc::invalid_datum, "bad table size");
        for (const auto& row : table) {
            require(int(row.size()) == order, errc::invalid_datum, "bad table row");
            for (int v : row) require(v >= 0 && v < order, errc::invalid_datum, "table entry out of range");
        }
        for (int i = 0; i < order; ++i)
            require(mul(identity, i) == i && mul(i, identity) == i, errc::invalid_datum, "identity fails");
        require(int(inverse.size()) == order, errc::invalid_datum, "bad inverse table");
        for (int i = 0; i < order; ++i)
            require(mul(i, inverse[i]) == identity && mul(inverse[i], i) == identity,
                    errc::invalid_datum, "inverse fails");
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                for (int k = 0; k < order; ++k)
                    require(mul(mul(i, j), k) == mul(i, mul(j, k)), errc::invalid_datum,
                            "associativity fails");
    }

    static FiniteGroup from_table(std::vector<std::vector<int>> t, std::vector<std::string> nm = {}) {
        FiniteGroup g;
        g.order = int(t.size());
        g.table = std::move(t);
        g.names = nm.empty() ? default_names(g.order) : std::move(nm);
        g.identity = -1;
        for (int e = 0; e < g.order && g.identity < 0; ++e) {
            bool ok = true;
            for (int i = 0; i < g.order; ++i) ok = ok && g.table[e][i] == i && g.table[i][e] == i;
            if (ok) g.identity = e;
        }
        require(g.identity >= 0, errc::invalid_datum, "no identity element");
        g.inverse.assign(g.order, -1);
        for (int i = 0; i < g.order; ++i)
            for (int j = 0; j < g.order; ++j)
                if (g.table[i][j] == g.identity) g.inverse[i] = j;
        g.validate();
        return g;
    }

    static FiniteGroup cyclic(int n) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        std::vector<std::string> nm(n);
        for (int i = 0; i < n; ++i) nm[i] = i == 0 ? "1" : (i == 1 ? "z" : "z^" + std::to_string(i));
        return from_table(std::move(t), std::move(nm));
    }

    static FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
        int n = A.order * B.order;
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int ai = i / B.order, bi = i % B.order;
                int aj = j / B.order, bj = j % B.order;
                t[i][j] = A.mul(ai, aj) * B.order + B.mul(bi, bj);
            }
        std::vector<std::string> nm(n);
        for (int i = 0; i < n; ++i) nm[i] = "(" + A.names[i / B.order] + "," + B.names[i % B.order] + ")";
        return from_table(std::move(t), std::move(nm));
    }

    /// Quotient by the central cyclic subgroup generated by g.  Also fills the
    /// projection map (element -> coset index).
    FiniteGroup quotient_by_central(int g, std::vector<int>* projection = nullptr) const {
        require(is_central(g), errc::invalid_datum, "subgroup generator is not central");
        std::vector<int> sub;
        int acc = identity;
        do {
            sub.push_back(acc);
            acc = mul(acc, g);
        } while (acc != identity);
        std::vector<int> coset_of(order, -1);
        std::vector<int> reps;
        for (int i = 0; i < order; ++i) {
            if (coset_of[i] >= 0) continue;
            int id = int(reps.size());
            reps.push_back(i);
            for (int s : sub) coset_of[mul(i, s)] = id;
        }
        int q = int(reps.size());
        std::vector<std::vector<int>> t(q, std::vector<int>(q));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) t[i][j] = coset_of[mul(reps[i], reps[j])];
        std::vector<std::string> nm(q);
        for (int i = 0; i < q; ++i) nm[i] = "[" + names[reps[i]] + "]";
        if (projection) *projection = coset_of;
        return from_table(std::move(t), std::move(nm));
    }

  private:
    static std::vector<std::string> default_names(int n) {
        std::vector<std::string> nm(n);
        for (int i = 0; i < n; ++i) nm[i] = "g" + std::to_string(i);
        return nm;
    }
};

} // namespace hopflab
