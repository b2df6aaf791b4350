// Copyright 2026 The pwcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/brute.hpp"

#include <cmath>

#include "pw/common.hpp"

namespace pw::testkit {

namespace {

Complex pf_rec(const std::vector<std::vector<Complex>> &a, std::vector<int> &idx) {
    if (idx.empty()) {
        return 1.0;
    }
    int i = idx[0];
    Complex total = 0.0;
    for (size_t k = 1; k < idx.size(); k++) {
        int j = idx[k];
        if (a[i][j] == 0.0) {
            continue;
        }
        std::vector<int> rest;
        for (size_t t = 1; t < idx.size(); t++) {
            if (t != k) {
                rest.push_back(idx[t]);
            }
        }
        double sign = k % 2 == 1 ? 1.0 : -1.0;
        total += sign * a[i][j] * pf_rec(a, rest);
    }
    return total;
}

Complex match_rec(const std::vector<std::vector<std::pair<int, Complex>>> &adj, std::vector<bool> &used) {
    int v = 0;
    int n = static_cast<int>(adj.size());
    while (v < n && used[v]) {
        v++;
    }
    if (v == n) {
        return 1.0;
    }
    used[v] = true;
    Complex total = 0.0;
    for (auto [w, wt] : adj[v]) {
        if (!used[w]) {
            used[w] = true;
            total += wt * match_rec(adj, used);
            used[w] = false;
        }
    }
    used[v] = false;
    return total;
}

}  // namespace

Complex pfaffian_expand(const std::vector<std::vector<Complex>> &a) {
    if (a.size() % 2 == 1) {
        return 0.0;
    }
    std::vector<int> idx(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        idx[i] = static_cast<int>(i);
    }
    return pf_rec(a, idx);
}

Complex matching_sum_brute(const WeightedPlaneGraph &g) {
    std::vector<std::vector<std::pair<int, Complex>>> adj(g.vertex_count);
    for (const auto &e : g.edges) {
        if (e.u == e.v) {
            continue;
        }
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    std::vector<bool> used(g.vertex_count, false);
    return match_rec(adj, used);
}

double kasteleyn_grid_count(int m, int n) {
    double prod = 1.0;
    for (int j = 1; j <= (m + 1) / 2; j++) {
        for (int k = 1; k <= (n + 1) / 2; k++) {
            double a = std::cos(M_PI * j / (m + 1));
            double b = std::cos(M_PI * k / (n + 1));
            prod *= 4 * a * a + 4 * b * b;
        }
    }
    return prod;
}

}  // namespace pw::testkit
