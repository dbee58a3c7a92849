#include "elq/oracle.hpp"

#include <algorithm>
#include <random>

#include "elq/combinatorics.hpp"
#include "elq/error.hpp"
#include "elq/modular.hpp"

namespace elq::oracle {

namespace {

constexpr std::array<std::array<int, 2>, 10> kQuadricMonomials{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

void check_prime(std::uint64_t p) {
    if (p < 3 || p >= (1ULL << 32) || !modp::is_prime(p)) {
        throw UsageError("oracle prime " + std::to_string(p) + " must be an odd prime below 2^32");
    }
}

// First nonzero coordinate scaled to 1.
Point normalize_point(Point x, std::uint64_t p) {
    for (auto c : x) {
        if (c != 0) {
            const auto s = modp::inv(c, p);
            for (auto& v : x) v = modp::mul(v, s, p);
            break;
        }
    }
    return x;
}

std::array<std::uint64_t, 4> quadric_gradient(const QuadricCoeffs& q, const Point& x, std::uint64_t p) {
    std::array<std::uint64_t, 4> g{};
    for (std::size_t k = 0; k < kQuadricMonomials.size(); ++k) {
        const auto [i, j] = kQuadricMonomials[k];
        if (i == j) {
            g[i] = modp::add(g[i], modp::mul(modp::mul(2, q[k], p), x[i], p), p);
        } else {
            g[i] = modp::add(g[i], modp::mul(q[k], x[j], p), p);
            g[j] = modp::add(g[j], modp::mul(q[k], x[i], p), p);
        }
    }
    return g;
}

QuadricCoeffs ruled_quadric(std::uint64_t p) {
    QuadricCoeffs q{};
    q[3] = 1;      // x0 x3
    q[5] = p - 1;  // -x1 x2
    return q;
}

}  // namespace

std::uint64_t eval_quadric(const QuadricCoeffs& q, const Point& x, std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < kQuadricMonomials.size(); ++k) {
        const auto [i, j] = kQuadricMonomials[k];
        s = modp::add(s, modp::mul(q[k], modp::mul(x[i], x[j], p), p), p);
    }
    return s;
}

std::uint64_t eval_ruled_quadric(const Point& x, std::uint64_t p) { return eval_quadric(ruled_quadric(p), x, p); }

bool is_smooth_curve_point(const CurveInstance& curve, const Point& x) {
    const auto p = curve.prime;
    if (eval_ruled_quadric(x, p) != 0 || eval_quadric(curve.second_quadric, x, p) != 0) return false;
    const auto g1 = quadric_gradient(ruled_quadric(p), x, p);
    const auto g2 = quadric_gradient(curve.second_quadric, x, p);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const auto minor = modp::sub(modp::mul(g1[i], g2[j], p), modp::mul(g1[j], g2[i], p), p);
            if (minor != 0) return true;
        }
    }
    return false;
}

CurveInstance make_curve(std::uint64_t p, std::size_t r, std::uint64_t seed) {
    check_prime(p);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p)};
    std::mt19937_64 gen(seq);

    CurveInstance curve;
    curve.prime = p;
    curve.seed = seed;

    // Second quadric: anything outside the span of x0x3 - x1x2.
    while (true) {
        for (auto& c : curve.second_quadric) c = gen() % p;
        bool in_span = true;
        for (std::size_t k = 0; k < 10; ++k) {
            if (k != 3 && k != 5 && curve.second_quadric[k] != 0) in_span = false;
        }
        if (modp::add(curve.second_quadric[3], curve.second_quadric[5], p) != 0) in_span = false;
        if (!in_span) break;
    }

    const auto& q = curve.second_quadric;
    const std::size_t cap = 64 * r + 256;
    std::size_t attempts = 0;
    while (curve.points.size() < r) {
        if (++attempts > cap) {
            throw InternalError("could not sample " + std::to_string(r) + " points on the curve over F_" +
                                std::to_string(p) + " (seed " + std::to_string(seed) + ")");
        }
        // Ruling line {(u, v, s u, s v)} of x0 x3 = x1 x2; q restricts to A u^2 + B uv + C v^2.
        const auto s = gen() % p;
        const bool flip = (gen() & 1) != 0;
        const auto a = eval_quadric(q, {1, 0, s, 0}, p);
        const auto c = eval_quadric(q, {0, 1, 0, s}, p);
        const auto b = modp::sub(modp::sub(eval_quadric(q, {1, 1, s, s}, p), a, p), c, p);
        if (a == 0) continue;
        const auto disc = modp::sub(modp::mul(b, b, p), modp::mul(4, modp::mul(a, c, p), p), p);
        const auto root = modp::sqrt(disc, p);
        if (!root) continue;
        const auto signed_root = flip ? modp::sub(0, *root, p) : *root;
        const auto u = modp::mul(modp::sub(signed_root, b, p), modp::inv(modp::mul(2, a, p), p), p);
        const Point pt = normalize_point({u, 1, modp::mul(s, u, p), s}, p);
        if (!is_smooth_curve_point(curve, pt)) continue;
        if (std::find(curve.points.begin(), curve.points.end(), pt) != curve.points.end()) continue;
        curve.points.push_back(pt);
    }
    return curve;
}

std::vector<std::array<int, 4>> monomials(int degree) {
    std::vector<std::array<int, 4>> out;
    if (degree < 0) return out;
    for (int a0 = degree; a0 >= 0; --a0) {
        for (int a1 = degree - a0; a1 >= 0; --a1) {
            for (int a2 = degree - a0 - a1; a2 >= 0; --a2) {
                out.push_back({a0, a1, a2, degree - a0 - a1 - a2});
            }
        }
    }
    return out;
}

ConditionMatrix condition_matrix(std::int64_t degree, const CurveInstance& curve, const std::vector<std::int64_t>& mults) {
    const auto p = curve.prime;
    if (degree < 0) throw UsageError("condition matrix needs a non-negative degree");
    if (p <= static_cast<std::uint64_t>(degree)) {
        throw UsageError("prime " + std::to_string(p) + " must exceed the degree " + std::to_string(degree));
    }
    if (mults.size() > curve.points.size()) throw UsageError("more multiplicities than sampled points");

    const int d = static_cast<int>(degree);
    const auto monos = monomials(d);
    ConditionMatrix mat;
    mat.prime = p;
    mat.cols = monos.size();

    // falling[a][k] = a (a-1) ... (a-k+1) mod p
    std::vector<std::vector<std::uint64_t>> falling(static_cast<std::size_t>(d) + 1);
    for (int a = 0; a <= d; ++a) {
        falling[a].assign(static_cast<std::size_t>(a) + 1, 1);
        for (int k = 1; k <= a; ++k) falling[a][k] = modp::mul(falling[a][k - 1], static_cast<std::uint64_t>(a - k + 1), p);
    }

    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] <= 0) continue;
        const auto& pt = curve.points[i];
        std::array<std::vector<std::uint64_t>, 4> powers;
        for (std::size_t v = 0; v < 4; ++v) {
            powers[v].assign(static_cast<std::size_t>(d) + 1, 1);
            for (int e = 1; e <= d; ++e) powers[v][e] = modp::mul(powers[v][e - 1], pt[v], p);
        }
        const int order = static_cast<int>(std::min<std::int64_t>(mults[i] - 1, degree));
        for (const auto& alpha : monomials(order)) {
            std::vector<std::uint64_t> row(mat.cols, 0);
            for (std::size_t j = 0; j < monos.size(); ++j) {
                const auto& a = monos[j];
                std::uint64_t entry = 1;
                for (std::size_t v = 0; v < 4 && entry != 0; ++v) {
                    if (a[v] < alpha[v]) {
                        entry = 0;
                        break;
                    }
                    entry = modp::mul(entry, falling[a[v]][alpha[v]], p);
                    entry = modp::mul(entry, powers[v][a[v] - alpha[v]], p);
                }
                row[j] = entry;
            }
            mat.data.insert(mat.data.end(), row.begin(), row.end());
            ++mat.rows;
        }
    }
    return mat;
}

std::size_t rank_mod_p(const ConditionMatrix& mat) {
    const auto p = mat.prime;
    auto a = mat.data;
    const auto rows = mat.rows;
    const auto cols = mat.cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
        }
        const auto inv = modp::inv(a[rank * cols + col], p);
        for (std::size_t j = col; j < cols; ++j) a[rank * cols + j] = modp::mul(a[rank * cols + j], inv, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const auto f = a[i * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                a[i * cols + j] = modp::sub(a[i * cols + j], modp::mul(f, a[rank * cols + j], p), p);
            }
        }
        ++rank;
    }
    return rank;
}

OracleResult oracle_dimension(const FatPointSystem& input, const OracleOptions& opts) {
    if (opts.seeds.empty() || opts.primes.empty()) throw UsageError("oracle needs at least one seed and one prime");
    const auto sys = input.normalized();
    OracleResult out;
    const std::int64_t ambient = sys.degree >= 0 ? binom(sys.degree + 3, 3) - 1 : -1;
    for (auto p : opts.primes) {
        check_prime(p);
        if (sys.degree >= 0 && p <= static_cast<std::uint64_t>(sys.degree)) {
            throw UsageError("prime " + std::to_string(p) + " must exceed the degree " + std::to_string(sys.degree));
        }
        for (auto seed : opts.seeds) {
            Trial trial{p, seed, 0, -1};
            if (sys.degree >= 0) {
                const auto curve = make_curve(p, sys.r(), seed);
                trial.rank = static_cast<std::int64_t>(rank_mod_p(condition_matrix(sys.degree, curve, sys.mults)));
                trial.dim = ambient - trial.rank;
            }
            out.trials.push_back(trial);
        }
    }
    out.dim = out.trials.front().dim;
    for (const auto& t : out.trials) {
        out.dim = std::min(out.dim, t.dim);
        if (t.dim != out.trials.front().dim) out.stable = false;
    }
    return out;
}

void to_json(nlohmann::json& j, const Trial& t) {
    j = nlohmann::json{{"prime", t.prime}, {"seed", t.seed}, {"rank", t.rank}, {"dim", t.dim}};
}

void to_json(nlohmann::json& j, const OracleResult& r) {
    j = nlohmann::json{{"dim", r.dim}, {"trials", r.trials}, {"stable", r.stable}};
}

}  // namespace elq::oracle
