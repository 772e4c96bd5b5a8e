#include "robinson/seriate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "robinson/gamma.hpp"
#include "robinson/rng.hpp"

namespace robinson {

namespace {

constexpr double kFiedlerTol = 1e-8;
constexpr int kFiedlerMaxIter = 10000;

std::vector<double> laplacian(const SymmetricMatrix& a) {
    int n = a.size();
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 1; i <= n; ++i) {
        double deg = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            double w = a.at(i, j);
            deg += w;
            l[static_cast<std::size_t>(i - 1) * n + (j - 1)] = -w;
        }
        l[static_cast<std::size_t>(i - 1) * n + (i - 1)] = deg;
    }
    return l;
}

void matvec(const std::vector<double>& m, const std::vector<double>& v, std::vector<double>& out) {
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0;
        const double* row = &m[i * n];
        for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
        out[i] = s;
    }
}

void remove_mean(std::vector<double>& v) {
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

FiedlerResult fiedler_order(const SymmetricMatrix& a) {
    int n = a.size();
    if (n < 2) throw ValidationError("spectral ordering needs n >= 2");
    std::size_t un = static_cast<std::size_t>(n);

    std::vector<double> l = laplacian(a);
    double shift = 0;
    for (int i = 0; i < n; ++i) shift = std::max(shift, 2 * l[static_cast<std::size_t>(i) * un + i]);
    shift += 1;  // keeps the shifted operator positive on the working subspace

    // Start from (1, .., n), centered: in fully degenerate spectra the
    // iteration then fixes increasing components and the order stays the
    // identity.
    std::vector<double> v(un), lv(un), work(un);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    remove_mean(v);
    double nv = norm(v);
    for (double& x : v) x /= nv;

    FiedlerInfo info;
    for (int it = 1; it <= kFiedlerMaxIter; ++it) {
        info.iterations = it;
        matvec(l, v, lv);
        double lambda = std::inner_product(v.begin(), v.end(), lv.begin(), 0.0);
        double residual = 0;
        for (std::size_t i = 0; i < un; ++i) {
            double r = lv[i] - lambda * v[i];
            residual += r * r;
        }
        info.lambda2 = lambda;
        if (std::sqrt(residual) <= kFiedlerTol) {
            info.converged = true;
            break;
        }
        // One step of power iteration on shift * I - L, kept orthogonal to
        // the all-ones kernel direction.
        for (std::size_t i = 0; i < un; ++i) work[i] = shift * v[i] - lv[i];
        remove_mean(work);
        double nw = norm(work);
        if (nw == 0) break;
        for (std::size_t i = 0; i < un; ++i) v[i] = work[i] / nw;
    }
    info.degenerate = info.converged && info.lambda2 <= kFiedlerTol;

    std::vector<int> idx(un);
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return v[static_cast<std::size_t>(x - 1)] < v[static_cast<std::size_t>(y - 1)];
    });

    FiedlerResult res;
    res.order = Permutation::of_images(std::move(idx));
    res.info = info;
    res.vector = std::move(v);
    return res;
}

namespace {

double eval_order(const SymmetricMatrix& a, const std::vector<int>& images) {
    return gamma1_fast(apply_permutation(a, Permutation::of_images(images)));
}

std::vector<int> insert_move(const std::vector<int>& images, int from, int to) {
    std::vector<int> out = images;
    int x = out[static_cast<std::size_t>(from - 1)];
    out.erase(out.begin() + (from - 1));
    out.insert(out.begin() + (to - 1), x);
    return out;
}

RestartLog run_descent(const SymmetricMatrix& a, std::string name, std::vector<int> start,
                       int max_moves) {
    int n = a.size();
    RestartLog log;
    log.start = std::move(name);
    double g = eval_order(a, start);
    log.start_gamma = g;

    std::vector<int> cur = std::move(start);
    for (int moves = 0; moves < max_moves; ++moves) {
        double best_g = g;
        std::vector<int> best;
        for (int from = 1; from <= n; ++from) {
            for (int to = 1; to <= n; ++to) {
                if (to == from) continue;
                std::vector<int> cand = insert_move(cur, from, to);
                double cg = eval_order(a, cand);
                if (cg < best_g) {
                    best_g = cg;
                    best = std::move(cand);
                }
            }
        }
        if (best.empty()) break;
        cur = std::move(best);
        g = best_g;
        log.gammas.push_back(g);
    }

    log.result = Permutation::of_images(cur);
    log.result_gamma = g;
    return log;
}

}  // namespace

SeriationResult seriate_local(const SymmetricMatrix& a, const SeriationConfig& cfg, int threads) {
    if (cfg.restarts < 1) throw ValidationError("restarts must be positive");
    if (cfg.max_moves < 1) throw ValidationError("max_moves must be positive");
    if (threads < 1) throw ValidationError("threads must be positive");
    int n = a.size();

    SeriationResult res;
    if (n == 1) {
        res.best = Permutation::identity(1);
        res.best_gamma = 0;
        return res;
    }

    FiedlerResult fied = fiedler_order(a);
    res.fiedler = fied.info;
    res.fiedler_fallback = !fied.info.converged;

    struct Start {
        std::string name;
        std::vector<int> images;
    };
    std::vector<Start> starts;
    starts.push_back({"fiedler", res.fiedler_fallback ? Permutation::identity(n).images()
                                                      : fied.order.images()});
    starts.push_back({"identity", Permutation::identity(n).images()});
    for (int r = 2; r <= cfg.restarts; ++r) {
        std::vector<int> images = Permutation::identity(n).images();
        CounterRng rng(cfg.seed + static_cast<std::uint64_t>(r));
        for (int i = n - 1; i >= 1; --i) {
            int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
        }
        starts.push_back({"random", std::move(images)});
    }

    res.logs.resize(starts.size());
    std::size_t next = 0;
    while (next < starts.size()) {
        std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                  starts.size() - next);
        std::vector<std::future<RestartLog>> futs;
        for (std::size_t k = 0; k < batch; ++k) {
            Start& s = starts[next + k];
            futs.push_back(std::async(std::launch::async, [&a, &cfg, &s] {
                return run_descent(a, s.name, s.images, cfg.max_moves);
            }));
        }
        for (std::size_t k = 0; k < batch; ++k) res.logs[next + k] = futs[k].get();
        next += batch;
    }

    std::size_t win = 0;
    for (std::size_t k = 1; k < res.logs.size(); ++k) {
        const RestartLog& c = res.logs[k];
        const RestartLog& w = res.logs[win];
        if (c.result_gamma < w.result_gamma ||
            (c.result_gamma == w.result_gamma && c.result < w.result))
            win = k;
    }
    res.best = res.logs[win].result;
    res.best_gamma = res.logs[win].result_gamma;
    return res;
}

}  // namespace robinson
