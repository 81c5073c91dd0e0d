#include "sympq/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "sympq/errors.hpp"
#include "sympq/factorial.hpp"
#include "sympq/gamma_ring.hpp"
#include "sympq/lambda_ring.hpp"
#include "sympq/laurent_models.hpp"
#include "sympq/pieri_paths.hpp"
#include "sympq/ring_matrix.hpp"
#include "sympq/tableaux.hpp"

namespace sympq {

namespace {

struct Sink {
    long checks = 0;
    std::vector<std::string> failures;

    bool check(bool ok, const std::function<std::string()>& detail) {
        ++checks;
        if (!ok) failures.push_back(detail());
        return ok;
    }
    void result(const CheckResult& r) {
        check(r.ok, [&] { return r.detail; });
    }
};

struct Task {
    std::string label;
    std::function<void(Sink&, std::mt19937_64&)> run;
};

using Bound = std::pair<std::string, std::vector<int>>;

struct Suite {
    std::vector<Bound> bounds;
    std::vector<Task> tasks;
};

int pick(int v, int fallback) { return v >= 0 ? v : fallback; }

int bounded(const char* flag, int v, int fallback, int lo, int hi) {
    int x = pick(v, fallback);
    if (x < lo || x > hi)
        throw DomainError(std::string("--") + flag + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    return x;
}

std::string clip(const std::string& s, std::size_t n = 400) { return s.size() > n ? s.substr(0, n) + " ..." : s; }

std::uint64_t label_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h;
}

std::mt19937_64 task_rng(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = label_hash(label);
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(ss);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string replay_command(const std::string& kind, const std::string& name, const std::vector<Bound>& bounds,
                           std::uint64_t seed, const std::string& label) {
    std::string s = "sympq " + kind + " " + name;
    for (const auto& [flag, v] : bounds) s += " --" + flag + " " + join(v);
    s += " --seed " + std::to_string(seed) + " --instance '" + label + "'";
    return s;
}

Report execute(const std::string& kind, const std::string& name, Suite suite, const SuiteOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    if (opt.instance) {
        std::erase_if(suite.tasks, [&](const Task& t) { return t.label != *opt.instance; });
        if (suite.tasks.empty()) throw DomainError("no instance labelled '" + *opt.instance + "'");
    }
    const std::size_t N = suite.tasks.size();
    std::vector<Sink> sinks(N);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < N;) {
            const Task& t = suite.tasks[i];
            auto rng = task_rng(opt.seed, t.label);
            try {
                t.run(sinks[i], rng);
            } catch (const std::exception& e) {
                sinks[i].checks += 1;
                sinks[i].failures.push_back(std::string("exception: ") + e.what());
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(N)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    Report rep;
    rep.kind = kind;
    rep.name = name;
    rep.bounds = suite.bounds;
    rep.instances = static_cast<long>(N);
    rep.seed = opt.seed;
    for (std::size_t i = 0; i < N; ++i) {
        rep.checks += sinks[i].checks;
        for (auto& f : sinks[i].failures)
            rep.failures.push_back(
                {suite.tasks[i].label, f, replay_command(kind, name, suite.bounds, opt.seed, suite.tasks[i].label)});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

template <class K>
std::string format_map(const std::map<K, Rational>& coeffs, const std::string& symbol) {
    if (coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (c.sign() < 0) c = -c;
        std::string basis = symbol + "[" + it->first.to_string() + "]";
        s += c.is_one() ? basis : c.to_string() + "*" + basis;
        first = false;
    }
    return s;
}

template <class K>
bool nonneg_integers(const std::map<K, Rational>& coeffs) {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const auto& kv) { return kv.second.is_integer() && kv.second.sign() >= 0; });
}

// ---- verify suites --------------------------------------------------------------

Suite suite_pieri(const SuiteOptions& opt) {
    const int max_mu = bounded("max-mu", opt.max_mu, 9, 0, 12);
    const int max_r = bounded("max-r", opt.max_r, 5, 1, 8);
    Suite s{{{"max-mu", {max_mu}}, {"max-r", {max_r}}}, {}};
    for (const auto& mu : enumerate_strict(max_mu))
        for (int r = 1; r <= max_r; ++r)
            s.tasks.push_back({"mu=" + mu.to_string() + " r=" + std::to_string(r), [mu, r](Sink& sink, auto&) {
                auto closed = pieri_expand(mu, r);
                auto gamma = structure_constants(mu, StrictPartition({r}));
                sink.check(gamma.coeffs.size() == closed.size() &&
                               std::all_of(closed.begin(), closed.end(),
                                           [&](const auto& kv) { return gamma.at(kv.first) == Rational(kv.second); }),
                           [&] {
                               std::map<StrictPartition, Rational> c;
                               for (const auto& [l, v] : closed) c.emplace(l, Rational(v));
                               return "closed " + format_map(c, "PC") + " | product " + format_map(gamma.coeffs, "PC");
                           });
                if (r == 1)
                    sink.check(std::all_of(closed.begin(), closed.end(), [](const auto& kv) { return kv.second == 1; }),
                               [] { return "r = 1 expansion is not multiplicity-free"; });
                for (int w = std::max(0, mu.weight() - r); w <= mu.weight() + r; w += 1) {
                    if ((mu.weight() + r - w) % 2 != 0) continue;
                    for (const auto& lam : strict_of_weight(w)) {
                        if (lam.length() != mu.length() && lam.length() != mu.length() + 1) continue;
                        auto it = closed.find(lam);
                        long f = it == closed.end() ? 0 : it->second;
                        Rational det = u_series(lam, mu, r)[r], paths = u_series_paths(lam, mu, r)[r];
                        long classes = 0;
                        for (const auto& kappa : pieri_kappas(mu, lam, r)) {
                            long c = class_count(mu, lam, kappa), e = class_count_enumerated(mu, lam, kappa);
                            sink.check(c == e, [&] {
                                return "family count through " + kappa.to_string() + ": formula " + std::to_string(c) +
                                       ", enumerated " + std::to_string(e);
                            });
                            classes += c;
                        }
                        sink.check(det == Rational(2 * f) && paths == Rational(2 * f) && classes == 2 * f, [&] {
                            return "lam=" + lam.to_string() + ": closed " + std::to_string(f) + ", det " +
                                   det.to_string() + ", paths " + paths.to_string() + ", families " +
                                   std::to_string(classes);
                        });
                    }
                }
            }});
    return s;
}

Suite suite_tableaux(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 6, 0, 8);
    const int N = bounded("n", opt.n, 3, 1, 4);
    Suite s{{{"max-weight", {W}}, {"n", {N}}}, {}};
    for (const auto& lam : enumerate_strict(W))
        for (int n = 1; n <= N; ++n)
            s.tasks.push_back({"lam=" + lam.to_string() + " n=" + std::to_string(n), [lam, n](Sink& sink, auto&) {
                SpecializationContext ctx(n);
                for (const auto& mu : strict_subpartitions(lam)) {
                    SkewShiftedShape shape(lam, mu);
                    LaurentPoly q = specialize(usymp_Q_skew(lam, mu), ctx);
                    LaurentPoly tq = tableau_sum(shape, n, true);
                    sink.check(tq == q, [&] {
                        return shape.to_string() + " Q: tableaux " + clip(tq.to_string()) + " | Pfaffian " +
                               clip(q.to_string());
                    });
                    LaurentPoly p = q * Rational(2).pow(mu.length() - lam.length());
                    LaurentPoly tp = tableau_sum(shape, n, false);
                    sink.check(tp == p, [&] {
                        return shape.to_string() + " P: tableaux " + clip(tp.to_string()) + " | Pfaffian " +
                               clip(p.to_string());
                    });
                }
            }});
    return s;
}

Suite suite_flip(const SuiteOptions& opt) {
    const int R = bounded("r", opt.r, 4, 1, 5);
    const int N = bounded("n", opt.n, 3, 1, 4);
    Suite s{{{"r", {R}}, {"n", {N}}}, {}};
    for (const auto& lam : strict_subpartitions(staircase(R)))
        for (int n = 1; n <= N; ++n)
            s.tasks.push_back({"lam=" + lam.to_string() + " n=" + std::to_string(n), [lam, n, R](Sink& sink, auto&) {
                for (const auto& mu : strict_subpartitions(lam)) {
                    SkewShiftedShape shape(lam, mu);
                    SkewShiftedShape dual(staircase_complement(mu, R), staircase_complement(lam, R));
                    const std::string what = shape.to_string() + " -> " + dual.to_string();
                    if (n == 1)
                        sink.check(usymp_Q_skew(lam, mu) == usymp_Q_skew(dual.outer(), dual.inner()),
                                   [&] { return what + ": universal skew functions differ"; });
                    LaurentPoly a = tableau_sum(shape, n, true), b = tableau_sum(dual, n, true);
                    sink.check(a == b, [&] { return what + ": " + clip(a.to_string()) + " | " + clip(b.to_string()); });
                    std::uint64_t count = 0;
                    bool ok = true;
                    std::string bad;
                    enumerate_tableaux(shape, n, true, [&](const Tableau& t) {
                        ++count;
                        if (!ok) return;
                        Tableau f = flip(t, R, n);
                        if (f.shape().outer() != dual.outer() || f.shape().inner() != dual.inner() || !f.is_valid(n, true) || flip(f, R, n).entries() != t.entries()) {
                            ok = false;
                            bad = t.render();
                        }
                    });
                    sink.check(ok, [&] { return what + ": flip fails on\n" + bad; });
                    std::uint64_t dual_count = tableau_count(dual, n, true);
                    sink.check(count == dual_count, [&] {
                        return what + ": " + std::to_string(count) + " vs " + std::to_string(dual_count) + " tableaux";
                    });
                }
            }});
    return s;
}

Suite suite_sep_var(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 5, 0, 6);
    const int N = bounded("n", opt.n, 2, 1, 3);
    Suite s{{{"max-weight", {W}}, {"n", {N}}}, {}};
    for (const auto& lam : enumerate_strict(W))
        for (int n = 1; n <= N; ++n)
            s.tasks.push_back({"lam=" + lam.to_string() + " n=m=" + std::to_string(n),
                               [lam, n](Sink& sink, auto&) { sink.result(separation_check(lam, n, n)); }});
    return s;
}

Suite suite_nimmo(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 8, 0, 10);
    const int N = bounded("n", opt.n, 3, 1, 4);
    const int P = bounded("points", opt.points, 20, 1, 1000);
    Suite s{{{"max-weight", {W}}, {"n", {N}}, {"points", {P}}}, {}};
    for (const auto& lam : enumerate_strict(W))
        for (int n = 1; n <= N; ++n)
            s.tasks.push_back({"lam=" + lam.to_string() + " n=" + std::to_string(n), [lam, n, P](Sink& sink, auto& rng) {
                SpecializationContext ctx(n);
                LaurentPoly q = specialize(usymp_Q(lam), ctx), p = specialize(usymp_P(lam), ctx);
                LaurentPoly pf = schur_pfaffian_QC(lam, ctx);
                sink.check(pf == q, [&] { return "two-row Pfaffian " + clip(pf.to_string()) + " | " + clip(q.to_string()); });
                for (int k = 0; k < P; ++k) {
                    EvaluationPoint pt = random_point(n, rng);
                    Rational vq = q.eval(pt.values), vp = p.eval(pt.values);
                    Rational nq = nimmo_eval(lam, PQKind::Q, pt), np = nimmo_eval(lam, PQKind::P, pt);
                    sink.check(nq == vq && np == vp, [&] {
                        std::string at;
                        for (const auto& v : pt.values) at += v.to_string() + " ";
                        return "at " + at + ": Q " + nq.to_string() + " vs " + vq.to_string() + ", P " + np.to_string() +
                               " vs " + vp.to_string();
                    });
                }
            }});
    return s;
}

std::string point_string(const EvaluationPoint& pt) {
    std::string s;
    for (const auto& v : pt.values) s += (s.empty() ? "" : ",") + v.to_string();
    return s;
}

Suite suite_hall_littlewood(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 8, 0, 10);
    const int N = bounded("n", opt.n, 3, 1, 4);
    const int P = bounded("points", opt.points, 20, 1, 1000);
    const int M = bounded("max-mu", opt.max_mu, 6, 0, 8);
    Suite s{{{"max-weight", {W}}, {"n", {N}}, {"points", {P}}, {"max-mu", {M}}}, {}};
    for (int n = 1; n <= N; ++n) {
        for (const auto& lam : enumerate_strict(W, n))
            s.tasks.push_back({"t=-1 lam=" + lam.to_string() + " n=" + std::to_string(n),
                               [lam, n, P](Sink& sink, auto& rng) {
                                   SpecializationContext ctx(n);
                                   LaurentPoly q = specialize(usymp_Q(lam), ctx);
                                   LaurentPoly pf = schur_pfaffian_QC(lam, ctx);
                                   const Rational scale = Rational(2).pow(lam.length());
                                   for (int k = 0; k < P; ++k) {
                                       EvaluationPoint pt = random_point(n, rng);
                                       Rational a = q.eval(pt.values), b = nimmo_eval(lam, PQKind::Q, pt);
                                       Rational c = weyl_hall_littlewood_oracle(lam.as_partition(), Rational(-1), pt) * scale;
                                       Rational d = pf.eval(pt.values);
                                       sink.check(a == b && a == c && a == d, [&] {
                                           return "at " + point_string(pt) + ": universal " + a.to_string() + ", Nimmo " +
                                                  b.to_string() + ", Weyl sum " + c.to_string() + ", Pfaffian " +
                                                  d.to_string();
                                       });
                                   }
                               }});
        for (const auto& mu : enumerate_partitions(M, n))
            s.tasks.push_back({"t=0 mu=" + mu.to_string() + " n=" + std::to_string(n), [mu, n, P](Sink& sink, auto& rng) {
                LaurentPoly sc = bialternant_SC(mu, SpecializationContext(n));
                for (int k = 0; k < P; ++k) {
                    EvaluationPoint pt = random_point(n, rng);
                    Rational a = sc.eval(pt.values), b = weyl_hall_littlewood_oracle(mu, Rational(0), pt);
                    sink.check(a == b, [&] {
                        return "at " + point_string(pt) + ": bialternant " + a.to_string() + ", Weyl sum " + b.to_string();
                    });
                }
            }});
    }
    return s;
}

Suite suite_delta(const SuiteOptions& opt) {
    const int N = bounded("n", opt.n, 3, 1, 4);
    Suite s{{{"n", {N}}}, {}};
    for (int r = 0; r <= N; ++r)
        for (int q = 0; q <= r; ++q)
            s.tasks.push_back({"r=" + std::to_string(r) + " s=" + std::to_string(q), [r, q, N](Sink& sink, auto&) {
                StrictPartition sum(add(staircase(r).as_partition(), staircase(q).as_partition()).parts());
                auto prod = structure_constants(staircase(r), staircase(q));
                BasisExpansion want{Basis::SympP, {{sum, Rational(1)}}};
                sink.check(prod == want, [&] { return "product " + format_map(prod.coeffs, "PC"); });
                for (int n = std::max(1, r); n <= N; ++n) sink.result(delta_identities(r, q, SpecializationContext(n)));
            }});
    return s;
}

Suite suite_pc_sc(const SuiteOptions& opt) {
    const int N = bounded("n", opt.n, 3, 1, 4);
    const int W = bounded("max-weight", opt.max_weight, 4, 0, 6);
    Suite s{{{"n", {N}}, {"max-weight", {W}}}, {}};
    for (int n = 1; n <= N; ++n)
        for (const auto& mu : enumerate_partitions(W, n))
            s.tasks.push_back({"mu=" + mu.to_string() + " n=" + std::to_string(n), [mu, n](Sink& sink, auto&) {
                SpecializationContext ctx(n);
                Partition d = staircase(n).as_partition();
                StrictPartition lam(add(mu, d).parts());
                LaurentPoly lhs = specialize(usymp_P(lam), ctx);
                LaurentPoly rhs = bialternant_SC(d, ctx) * bialternant_SC(mu, ctx);
                sink.check(lhs == rhs, [&] {
                    return "P^C_" + lam.to_string() + " " + clip(lhs.to_string()) + " | S^C products " + clip(rhs.to_string());
                });
            }});
    return s;
}

Suite suite_length2_gf(const SuiteOptions& opt) {
    const int N = bounded("n", opt.n, 2, 1, 3);
    const int K = bounded("order", opt.order, 6, 0, 10);
    Suite s{{{"n", {N}}, {"order", {K}}}, {}};
    for (int n = 1; n <= N; ++n) {
        s.tasks.push_back({"one-row n=" + std::to_string(n),
                           [n, K](Sink& sink, auto&) { sink.result(check_gf_length1(n, K + 2)); }});
        s.tasks.push_back({"two-row n=" + std::to_string(n),
                           [n, K](Sink& sink, auto&) { sink.result(check_gf_length2(n, K)); }});
    }
    return s;
}

std::string series_string(const ZSeries& z) {
    std::string s;
    for (int k = 0; k <= z.order(); ++k) s += (k ? " " : "") + z[k].to_string();
    return "[" + s + "]";
}

Suite suite_b_series(const SuiteOptions& opt) {
    const int R = bounded("r", opt.r, 8, 0, 12);
    const int K = bounded("order", opt.order, 12, 0, 20);
    Suite s{{{"r", {R}}, {"order", {K}}}, {}};
    for (int r = 0; r <= R; ++r)
        for (int q = 0; q <= R; ++q)
            s.tasks.push_back({"r=" + std::to_string(r) + " s=" + std::to_string(q), [r, q, K](Sink& sink, auto&) {
                ZSeries closed = b_series(r, q, K), expanded = b_series_from_f_expansion(r, q, K);
                sink.check(closed == expanded, [&] {
                    return "closed " + series_string(closed) + ", f-expansion " + series_string(expanded);
                });
                // Path sums stand in for b only at r >= 1, the only case the determinant uses.
                if (r == 0) return;
                ZSeries walked = path_weight_sum_enumerated(q, r, K), dp = path_weight_sum(q, r, K);
                sink.check(closed == walked && closed == dp, [&] {
                    return "closed " + series_string(closed) + ", path recursion " + series_string(dp) +
                           ", path enumeration " + series_string(walked);
                });
            }});
    return s;
}

Suite suite_length2_b(const SuiteOptions& opt) {
    const int R = bounded("r", opt.r, 8, 1, 12);
    Suite s{{{"r", {R}}}, {}};
    for (int r = 1; r <= R; ++r)
        for (int q = 0; q < r; ++q)
            s.tasks.push_back({"r=" + std::to_string(r) + " s=" + std::to_string(q), [r, q](Sink& sink, auto&) {
                StrictPartition lam = q == 0 ? StrictPartition({r}) : StrictPartition({r, q});
                std::map<StrictPartition, Rational> want{{lam, Rational(1)}};
                if (q > 0) {
                    for (int j = 1; j <= q - 1; ++j) want[StrictPartition({r - j, q - j})] = Rational(2);
                    want[StrictPartition({r - q})] = Rational(1);
                }
                auto got = schurP_in_sympP(lam);
                sink.check(got.coeffs == want, [&] {
                    return "P_" + lam.to_string() + " = " + format_map(got.coeffs, "PC") + ", expected " +
                           format_map(want, "PC");
                });
            }});
    return s;
}

bool is_hook(const Partition& mu) {
    for (int i = 1; i < mu.length(); ++i)
        if (mu[i] != 1) return false;
    return !mu.empty();
}

Suite suite_hooks(const SuiteOptions& opt) {
    const int R = bounded("r", opt.r, 8, 1, 12);
    Suite s{{{"r", {R}}}, {}};
    for (int r = 1; r <= R; ++r)
        s.tasks.push_back({"r=" + std::to_string(r), [r](Sink& sink, auto&) {
            std::map<Partition, Rational> want;
            for (const auto& mu : enumerate_partitions(r)) {
                int w = mu.weight();
                int c = 0;
                if (is_hook(mu) && w == r) c = 1;
                else if (is_hook(mu) && w % 2 == r % 2 && w >= 1 && w <= r - 1) c = 2;
                else if (mu.empty() && r % 2 == 0) c = 1;
                if (c) want[mu] = Rational(c);
            }
            auto got = g_tilde_expansion(StrictPartition({r}));
            sink.check(got == want, [&] {
                return "P^C_(" + std::to_string(r) + ") = " + format_map(got, "sC") + ", expected " + format_map(want, "sC");
            });
        }});
    return s;
}

FactorialParams trial_params(std::uint64_t seed, int trial, int m) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0xfacu,
                     static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(ss);
    return random_params(m, rng);
}

Suite suite_fac_tableaux(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 5, 0, 6);
    const int N = bounded("n", opt.n, 2, 1, 3);
    const int T = bounded("trials", opt.trials, 5, 1, 50);
    Suite s{{{"max-weight", {W}}, {"n", {N}}, {"trials", {T}}}, {}};
    const std::uint64_t seed = opt.seed;
    for (int t = 0; t < T; ++t)
        for (const auto& lam : enumerate_strict(W))
            for (int n = 1; n <= N; ++n)
                s.tasks.push_back({"trial=" + std::to_string(t) + " lam=" + lam.to_string() + " n=" + std::to_string(n),
                                   [lam, n, t, seed](Sink& sink, auto&) {
                                       FactorialParams a = trial_params(seed, t, 12);
                                       SpecializationContext ctx(n);
                                       for (const auto& mu : strict_subpartitions(lam)) {
                                           SkewShiftedShape shape(lam, mu);
                                           LaurentPoly x = fac_tableau_sum(shape, n, a);
                                           LaurentPoly y = specialize(ufac_Q_skew(lam, mu, a), ctx);
                                           sink.check(x == y, [&] {
                                               return shape.to_string() + " a=" + a.to_string() + ": tableaux " +
                                                      clip(x.to_string()) + " | Pfaffian " + clip(y.to_string());
                                           });
                                       }
                                   }});
    return s;
}

Suite suite_factorial(const SuiteOptions& opt) {
    const int R = bounded("r", opt.r, 6, 0, 8);
    const int N = bounded("n", opt.n, 2, 1, 3);
    const int T = bounded("trials", opt.trials, 5, 1, 50);
    const int P = bounded("points", opt.points, 20, 1, 1000);
    Suite s{{{"r", {R}}, {"n", {N}}, {"trials", {T}}, {"points", {P}}}, {}};
    const std::uint64_t seed = opt.seed;
    for (int t = 0; t < T; ++t) {
        const std::string tag = "trial=" + std::to_string(t) + " ";
        for (int n = 1; n <= N; ++n)
            s.tasks.push_back({tag + "Q=Rg n=" + std::to_string(n), [R, n, t, seed](Sink& sink, auto&) {
                FactorialParams a = trial_params(seed, t, 12);
                for (int r = 0; r <= R; ++r) sink.result(check_Q_equals_Rg(r, n, a));
            }});
        s.tasks.push_back({tag + "g from g", [t, seed](Sink& sink, auto&) {
            FactorialParams a = trial_params(seed, t, 12);
            for (int r = 0; r <= 8; ++r) {
                LaurentPoly x = g_tilde_fac(r, a), y = g_tilde_fac_from_g(r, a);
                sink.check(x == y, [&] { return "r=" + std::to_string(r) + ": " + x.to_string() + " | " + y.to_string(); });
            }
            for (int r = 0; r <= 8; ++r)
                for (int i = 0; i <= r; ++i)
                    for (int j = 0; i + j <= r; ++j)
                        sink.check(check_rel_e(a, r, i, j), [&] {
                            return "e-relation r=" + std::to_string(r) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j) + " a=" + a.to_string();
                        });
        }});
        s.tasks.push_back({tag + "separation", [t, seed](Sink& sink, auto&) {
            FactorialParams a = trial_params(seed, t, 12);
            for (const auto& lam : enumerate_strict(4)) sink.result(check_fac_separation(lam, 1, 1, a));
        }});
        for (int n = 1; n <= 3; ++n)
            s.tasks.push_back({tag + "Nimmo n=" + std::to_string(n), [n, t, seed, P](Sink& sink, auto& rng) {
                FactorialParams a = trial_params(seed, t, 12);
                for (const auto& lam : enumerate_strict(5, n)) {
                    LaurentPoly q = specialize(ufac_Q(lam, a), SpecializationContext(n));
                    for (int k = 0; k < P; ++k) {
                        EvaluationPoint pt = random_point(n, rng);
                        Rational x = q.eval(pt.values), y = nimmo_eval(lam, PQKind::Q, pt, &a.values);
                        sink.check(x == y, [&] {
                            return lam.to_string() + " at " + point_string(pt) + " a=" + a.to_string() + ": " +
                                   x.to_string() + " vs " + y.to_string();
                        });
                    }
                }
            }});
    }
    return s;
}

Suite suite_pfaffian(const SuiteOptions& opt) {
    const int T = bounded("trials", opt.trials, 50, 1, 10000);
    const int M = bounded("n", opt.n, 8, 0, 12);
    Suite s{{{"trials", {T}}, {"n", {M}}}, {}};
    for (int t = 0; t < T; ++t)
        s.tasks.push_back({"trial=" + std::to_string(t), [M](Sink& sink, auto& rng) {
            std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
            for (int size = 0; size <= M; ++size) {
                RingMatrix<Rational> m(size, size);
                for (int i = 0; i < size; ++i)
                    for (int j = i + 1; j < size; ++j) {
                        m(i, j) = Rational(num(rng), den(rng));
                        m(j, i) = -m(i, j);
                    }
                Rational det = determinant(m);
                if (size % 2 == 1) {
                    sink.check(det.is_zero(), [&] { return "odd size " + std::to_string(size) + ": det " + det.to_string(); });
                    continue;
                }
                Rational pf = pfaffian(m);
                sink.check(pf * pf == det, [&] {
                    return "size " + std::to_string(size) + ": Pf " + pf.to_string() + ", det " + det.to_string();
                });
            }
        }});
    return s;
}

Suite suite_components(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 12, 0, 16);
    Suite s{{{"max-weight", {W}}}, {}};
    for (const auto& lam : enumerate_strict(W))
        s.tasks.push_back({"lam=" + lam.to_string(), [lam](Sink& sink, auto&) {
            for (const auto& mu : strict_subpartitions(lam)) {
                if (!interlaces(lam, mu)) continue;
                int a = components(lam, mu), b = flood_fill_components(lam, mu);
                sink.check(a == b, [&] {
                    return mu.to_string() + ": formula " + std::to_string(a) + ", flood fill " + std::to_string(b);
                });
            }
        }});
    return s;
}

GammaElement random_gamma(int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 6), coef(-9, 9), den(1, 4);
    GammaElement e;
    const int terms = nterms(rng);
    for (int k = 0; k < terms; ++k) {
        std::uniform_int_distribution<int> deg(0, degree);
        int d = deg(rng);
        std::vector<int> idx;
        while (d > 0) {
            std::uniform_int_distribution<int> part(1, d);
            int p = part(rng);
            idx.push_back(p);
            d -= p;
        }
        std::sort(idx.begin(), idx.end(), std::greater<int>());
        e += GammaElement::monomial(idx, Rational(coef(rng), den(rng)));
    }
    return e;
}

Suite suite_basis(const SuiteOptions& opt) {
    const int D = bounded("max-weight", opt.max_weight, 10, 0, 14);
    const int T = bounded("trials", opt.trials, 20, 1, 1000);
    Suite s{{{"max-weight", {D}}, {"trials", {T}}}, {}};
    for (int t = 0; t < T; ++t)
        s.tasks.push_back({"trial=" + std::to_string(t), [D](Sink& sink, auto& rng) {
            GammaElement e = random_gamma(D, rng);
            for (Basis b : {Basis::SchurQ, Basis::SchurP, Basis::SympQ, Basis::SympP}) {
                GammaElement back = from_basis(to_basis(e, b));
                sink.check(back == e, [&] {
                    return basis_name(b) + ": " + clip(e.to_string()) + " came back as " + clip(back.to_string());
                });
            }
        }});
    return s;
}

Suite suite_gamma_tilde(const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, 6, 0, 8);
    const int N = bounded("n", opt.n, 3, 2, 4);
    Suite s{{{"max-weight", {W}}, {"n", {N}}}, {}};
    for (const auto& lam : enumerate_strict(W))
        s.tasks.push_back({"lam=" + lam.to_string(), [lam, N](Sink& sink, auto& rng) {
            SpecializationContext ctx(N);
            std::uniform_int_distribution<int> num(1, 30), den(1, 30);
            for (const LaurentPoly& f : {specialize(usymp_Q(lam), ctx), specialize(usymp_P(lam), ctx)}) {
                Rational t1(num(rng), den(rng)), t2 = t1 + Rational(num(rng), den(rng));
                auto at = [&](const Rational& t) { return f.substitute(0, t).substitute(1, -t); };
                LaurentPoly a = at(t1), b = at(t2);
                sink.check(a == b, [&] {
                    return "t=" + t1.to_string() + ": " + clip(a.to_string()) + " | t=" + t2.to_string() + ": " +
                           clip(b.to_string());
                });
            }
        }});
    return s;
}

using SuiteFactory = Suite (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFactory>>& verify_table() {
    static const std::vector<std::pair<std::string, SuiteFactory>> table = {
        {"pieri", suite_pieri},
        {"tableaux", suite_tableaux},
        {"flip", suite_flip},
        {"sep-var", suite_sep_var},
        {"nimmo", suite_nimmo},
        {"hall-littlewood", suite_hall_littlewood},
        {"fac-tableaux", suite_fac_tableaux},
        {"delta", suite_delta},
        {"length2-gf", suite_length2_gf},
        {"pc-sc", suite_pc_sc},
        {"b-series", suite_b_series},
        {"length2-b", suite_length2_b},
        {"hooks", suite_hooks},
        {"factorial", suite_factorial},
        {"pfaffian", suite_pfaffian},
        {"components", suite_components},
        {"basis", suite_basis},
        {"gamma-tilde", suite_gamma_tilde},
    };
    return table;
}

// ---- sweeps -----------------------------------------------------------------------

std::vector<int> sweep_ns(const SuiteOptions& opt) {
    std::vector<int> ns = opt.ns;
    if (ns.empty() && opt.n >= 0) ns = {opt.n};
    if (ns.empty()) ns = {2, 3};
    for (int n : ns)
        if (n < 1 || n > 4) throw DomainError("--n values must be in 1..4");
    return ns;
}

Suite sweep_suite(const std::string& id, const SuiteOptions& opt) {
    const int W = bounded("max-weight", opt.max_weight, id == "4" ? 12 : id == "3b" ? 8 : 10, 0, 20);
    Suite s{{{"max-weight", {W}}}, {}};
    auto strict = enumerate_strict(W);
    if (id == "1") {
        for (std::size_t i = 0; i < strict.size(); ++i)
            for (std::size_t j = i; j < strict.size(); ++j) {
                const auto mu = strict[i], nu = strict[j];
                if (mu.weight() + nu.weight() > W) continue;
                s.tasks.push_back({mu.to_string() + " * " + nu.to_string(), [mu, nu](Sink& sink, auto&) {
                    auto f = structure_constants(mu, nu);
                    sink.check(nonneg_integers(f.coeffs), [&] {
                        return "PC[" + mu.to_string() + "] * PC[" + nu.to_string() + "] = " + format_map(f.coeffs, "PC");
                    });
                }});
            }
    } else if (id == "2") {
        for (const auto& lam : strict)
            s.tasks.push_back({lam.to_string(), [lam](Sink& sink, auto&) {
                for (const auto& mu : strict_subpartitions(lam)) {
                    auto d = coproduct_constants(lam, mu);
                    sink.check(nonneg_integers(d.coeffs), [&] {
                        return "QC[" + lam.to_string() + "/" + mu.to_string() + "] = " + format_map(d.coeffs, "QC");
                    });
                }
            }});
    } else if (id == "3a") {
        for (const auto& lam : strict)
            s.tasks.push_back({lam.to_string(), [lam](Sink& sink, auto&) {
                auto g = g_tilde_expansion(lam);
                sink.check(nonneg_integers(g),
                           [&] { return "PC[" + lam.to_string() + "] = " + format_map(g, "sC"); });
            }});
    } else if (id == "3b") {
        auto ns = sweep_ns(opt);
        s.bounds.push_back({"n", ns});
        for (int n : ns)
            for (const auto& lam : enumerate_strict(W, n))
                s.tasks.push_back({lam.to_string() + " n=" + std::to_string(n), [lam, n](Sink& sink, auto&) {
                    SpecializationContext ctx(n);
                    auto g = expand_in_SC_basis(specialize(usymp_P(lam), ctx), ctx);
                    sink.check(nonneg_integers(g), [&] {
                        return "PC[" + lam.to_string() + "](x1..x" + std::to_string(n) + ") = " + format_map(g, "SC");
                    });
                }});
    } else if (id == "4") {
        for (const auto& lam : strict)
            s.tasks.push_back({lam.to_string(), [lam](Sink& sink, auto&) {
                auto b = schurP_in_sympP(lam);
                sink.check(nonneg_integers(b.coeffs),
                           [&] { return "P[" + lam.to_string() + "] = " + format_map(b.coeffs, "PC"); });
            }});
    } else {
        throw DomainError("unknown conjecture '" + id + "' (expected 1, 2, 3a, 3b or 4)");
    }
    return s;
}

}  // namespace

std::vector<std::string> verify_suites() {
    std::vector<std::string> out;
    for (const auto& [name, f] : verify_table()) out.push_back(name);
    return out;
}

std::vector<std::string> sweep_ids() { return {"1", "2", "3a", "3b", "4"}; }

Report run_verify(const std::string& theorem, const SuiteOptions& opt) {
    for (const auto& [name, f] : verify_table())
        if (name == theorem) return execute("verify", name, f(opt), opt);
    std::string known;
    for (const auto& n : verify_suites()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown verify suite '" + theorem + "' (known: " + known + ")");
}

Report run_sweep(const std::string& conjecture, const SuiteOptions& opt) {
    return execute("sweep", conjecture, sweep_suite(conjecture, opt), opt);
}

std::string format_expansion(const std::map<StrictPartition, Rational>& coeffs, const std::string& symbol) {
    return format_map(coeffs, symbol);
}

std::string format_expansion(const std::map<Partition, Rational>& coeffs, const std::string& symbol) {
    return format_map(coeffs, symbol);
}

}  // namespace sympq
