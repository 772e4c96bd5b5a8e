#include "robinson/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "robinson/approx.hpp"
#include "robinson/gamma.hpp"
#include "robinson/layers.hpp"

namespace robinson {

namespace {

void check_options(const ApproxOptions& opt) {
    if (!opt.preprocess && !opt.force_unit_diagonal)
        throw ValidationError(
            "rounding without preprocessing needs the unit diagonal; "
            "enable force_unit_diagonal");
}

double mode_bound_for(const ApproxOptions& opt, double eps, int n) {
    if (opt.preprocess) return 26 * std::cbrt(eps);
    return std::pow(2.0, 4.5) * std::pow(eps, 0.25) + 5.0 / n;
}

void fill_bounds(ApproxReport& rep, double eps, const ApproxOptions& opt, int n) {
    rep.gamma1 = eps;
    rep.upper_bound = 26 * std::cbrt(eps);
    rep.lower_bound = eps / 4;
    rep.mode_bound = mode_bound_for(opt, eps, n);
    rep.preprocess_used = opt.preprocess;
    rep.diagonal_restored = opt.restore_diagonal;
}

void finish_report(ApproxReport& rep, double l1, const ApproxOptions& opt) {
    rep.l1_dist = l1;
    rep.upper_bound_holds = l1 <= rep.upper_bound;
    rep.mode_bound_holds = l1 <= rep.mode_bound;
    // The distance guarantee is a theorem only when each layer's diagonal
    // was forced to 1 first; without that the bound is reported but not
    // enforced (diagonal zeros can make the inversion pass move mass with
    // no gamma1 budget to pay for it).
    if (!rep.mode_bound_holds && opt.force_unit_diagonal)
        throw InternalError("distance guarantee failed");
}

// Repairs one 0/1 layer in place of the pipeline: diagonal fix, optional
// preprocessing, rounding. eps is the layer's own gamma1, already nonzero.
BinaryMask repair_layer(const BinaryMask& layer, double eps, const ApproxOptions& opt,
                        LayerReport& lr) {
    int n = layer.size();
    BinaryMask work = layer;
    if (opt.force_unit_diagonal)
        for (int i = 1; i <= n; ++i) work.set(i, i, true);

    double t = opt.preprocess ? threshold_theorem(eps, n) : threshold_corollary(eps, n);
    lr.threshold = t;

    BinaryMask hat = work;
    if (opt.preprocess) {
        PreprocessResult pre = preprocess(work, t);
        hat = std::move(pre.matrix);
        lr.toggles = static_cast<int>(pre.trace.toggles.size());
        lr.l1_preprocess = pre.trace.l1_moved;
        lr.gamma_after_preprocess = pre.trace.gamma_after;
        lr.trace = std::move(pre.trace);
    } else {
        lr.gamma_after_preprocess = eps;
    }

    BinaryMask rounded = robinson_approx_binary(hat, t);
    lr.l1_threshold = l1_distance(hat, rounded);
    return rounded;
}

}  // namespace

BinaryApproxResult approximate_binary(const BinaryMask& a, const ApproxOptions& opt) {
    check_options(opt);
    int n = a.size();
    double n3 = static_cast<double>(n) * n * n;

    ApproxReport rep;
    rep.n = n;
    std::uint64_t eps_count = detail::gamma1_count(a);
    double eps = static_cast<double>(eps_count) / n3;
    fill_bounds(rep, eps, opt, n);

    if (eps_count == 0) {
        rep.m_layers = 0;
        finish_report(rep, 0.0, opt);
        return {a, rep};
    }

    LayerReport lr;
    lr.level = 1;
    lr.weight = 1;
    lr.eps = eps;
    BinaryMask r = repair_layer(a, eps, opt, lr);
    if (opt.restore_diagonal)
        for (int i = 1; i <= n; ++i) r.set(i, i, a.at(i, i));
    if (!is_robinson(r)) throw InternalError("rounded matrix is not Robinson");

    rep.m_layers = 1;
    rep.per_layer.push_back(std::move(lr));
    finish_report(rep, l1_distance(a, r), opt);
    return {std::move(r), rep};
}

GeneralApproxResult approximate_general(const SymmetricMatrix& a, const ApproxOptions& opt) {
    check_options(opt);
    int n = a.size();
    double n3 = static_cast<double>(n) * n * n;

    ApproxReport rep;
    rep.n = n;
    double eps = gamma1_fast(a);
    fill_bounds(rep, eps, opt, n);

    if (eps == 0.0) {
        rep.m_layers = 0;
        finish_report(rep, 0.0, opt);
        return {a, rep};
    }

    Layering lay = decompose(a);
    int m = lay.layer_count();
    rep.m_layers = m;

    std::vector<double> acc(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 1; k <= m; ++k) {
        const BinaryMask& layer = lay.layers[static_cast<std::size_t>(k - 1)];
        double w = lay.weights[static_cast<std::size_t>(k - 1)];

        LayerReport lr;
        lr.level = lay.levels[static_cast<std::size_t>(k)];
        lr.weight = w;
        std::uint64_t eps_count = detail::gamma1_count(layer);
        lr.eps = static_cast<double>(eps_count) / n3;

        BinaryMask repaired(n);
        if (eps_count == 0) {
            lr.bypassed = true;
            lr.gamma_after_preprocess = 0;
            repaired = layer;
        } else {
            repaired = repair_layer(layer, lr.eps, opt, lr);
        }

        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (repaired.at(i, j))
                    acc[static_cast<std::size_t>(i - 1) * n + (j - 1)] += w;
        rep.per_layer.push_back(std::move(lr));
    }

    SymmetricMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) r.set(i, j, acc[static_cast<std::size_t>(i - 1) * n + (j - 1)]);
    if (opt.restore_diagonal)
        for (int i = 1; i <= n; ++i) r.set(i, i, a.at(i, i));
    if (!is_robinson(r, 0.0)) throw InternalError("recombined matrix is not Robinson");

    finish_report(rep, l1_distance(a, r), opt);
    return {std::move(r), rep};
}

GeneralApproxResult approximate_no_preprocess(const SymmetricMatrix& a) {
    ApproxOptions opt;
    opt.preprocess = false;
    return approximate_general(a, opt);
}

Certificate certify(const SymmetricMatrix& a, const SymmetricMatrix& r, double tol) {
    if (a.size() != r.size()) throw ValidationError("dimension mismatch");
    if (!is_robinson(r, tol)) throw ValidationError("proposed approximation is not Robinson");
    Certificate c;
    c.gamma1 = gamma1_fast(a);
    c.l1_dist = l1_distance(a, r);
    c.upper_bound = 26 * std::cbrt(c.gamma1);
    c.lower_bound = c.gamma1 / 4;
    c.upper_bound_holds = c.l1_dist <= c.upper_bound;
    c.lower_bound_holds = c.l1_dist >= c.lower_bound;
    return c;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw ValidationError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ValidationError("duplicate edge");
    return Graph{n, std::move(edges)};
}

BinaryMask augmented_adjacency(const Graph& g) {
    BinaryMask b(g.n);
    for (int i = 1; i <= g.n; ++i) b.set(i, i, true);
    for (auto [u, v] : g.edges) b.set(u, v, true);
    return b;
}

GraphApproxResult unit_interval_approx(const Graph& g) {
    BinaryMask b = augmented_adjacency(g);
    BinaryApproxResult res = approximate_binary(b);

    std::uint64_t diff = diff_count(b, res.matrix);
    if (diff % 2 != 0) throw InternalError("asymmetric edit set");

    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v)
            if (res.matrix.at(u, v)) edges.emplace_back(u, v);

    GraphApproxResult out;
    out.graph = Graph{g.n, std::move(edges)};
    out.edit_distance = static_cast<std::int64_t>(diff / 2);
    out.report = std::move(res.report);
    return out;
}

}  // namespace robinson
