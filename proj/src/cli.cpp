#include "sympq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <thread>

#include "sympq/checks.hpp"
#include "sympq/errors.hpp"
#include "sympq/factorial.hpp"
#include "sympq/gamma_ring.hpp"
#include "sympq/lambda_ring.hpp"
#include "sympq/laurent_models.hpp"
#include "sympq/tableaux.hpp"

namespace sympq {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& c, Json entry) {
    entry["num"] = c.num_str();
    entry["den"] = c.den_str();
    return entry;
}

Json coeffs_json(const std::map<StrictPartition, Rational>& m) {
    Json arr = Json::array();
    for (auto it = m.rbegin(); it != m.rend(); ++it) arr.push_back(rational_json(it->second, {{"partition", it->first.parts()}}));
    return arr;
}

Json coeffs_json(const std::map<Partition, Rational>& m) {
    Json arr = Json::array();
    for (auto it = m.rbegin(); it != m.rend(); ++it) arr.push_back(rational_json(it->second, {{"partition", it->first.parts()}}));
    return arr;
}

template <class Tag>
Json coeffs_json(const GeneratorPoly<Tag>& g) {
    Json arr = Json::array();
    for (const auto& [m, c] : g.terms()) arr.push_back(rational_json(c, {{"partition", m}}));
    return arr;
}

Json coeffs_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::vector<int> e(it->first.begin(), it->first.begin() + p.nvars());
        arr.push_back(rational_json(it->second, {{"exponent", e}}));
    }
    return arr;
}

std::string basis_symbol(Basis b) {
    switch (b) {
        case Basis::SchurQ: return "Q";
        case Basis::SchurP: return "P";
        case Basis::SympQ: return "QC";
        case Basis::SympP: return "PC";
    }
    return "?";
}

// What a compute/expand call produced, ready for either output format.
struct Rendered {
    std::string object;
    std::string basis;
    std::string text;
    Json coeffs;
};

template <class Tag>
Rendered render(std::string object, const GeneratorPoly<Tag>& g) {
    return {std::move(object), Tag::symbol, g.to_string(), coeffs_json(g)};
}

Rendered render(std::string object, const LaurentPoly& p) {
    return {std::move(object), "laurent", p.to_string(), coeffs_json(p)};
}

Rendered render(std::string object, const BasisExpansion& x) {
    return {std::move(object), basis_name(x.basis), format_expansion(x.coeffs, basis_symbol(x.basis)),
            coeffs_json(x.coeffs)};
}

Rendered render_sc(std::string object, const std::map<Partition, Rational>& m, const std::string& basis,
                   const std::string& symbol) {
    return {std::move(object), basis, format_expansion(m, symbol), coeffs_json(m)};
}

void emit(const Rendered& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json j;
        j["object"] = r.object;
        j["basis"] = r.basis;
        j["coeffs"] = r.coeffs;
        out << j.dump(2) << "\n";
    } else {
        out << r.text << "\n";
    }
}

std::pair<StrictPartition, StrictPartition> parse_skew(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return {parse_strict(text), StrictPartition()};
    return {parse_strict(text.substr(0, slash)), parse_strict(text.substr(slash + 1))};
}

struct ComputeArgs {
    std::string object;
    std::string shape;
    int n = 0;
    std::string a;
    std::string basis;
    std::string format = "text";
};

Rendered compute(const ComputeArgs& c) {
    const std::string label = c.object + " " + c.shape;
    auto need_n = [&] {
        if (c.n < 1) throw DomainError(c.object + " needs --n");
        return SpecializationContext(c.n);
    };
    auto no_skew = [&](const StrictPartition& mu) {
        if (!mu.empty()) throw DomainError(c.object + " takes a straight shape");
    };
    // Gamma-valued objects: q-polynomial, a basis expansion, or the Laurent image.
    auto gamma_out = [&](const GammaElement& g) -> Rendered {
        if (!c.basis.empty()) {
            if (c.basis == "SC" || c.basis == "sC") {
                if (c.basis == "SC") {
                    auto ctx = need_n();
                    return render_sc(label, expand_in_SC_basis(specialize(g, ctx), ctx), "SC", "SC");
                }
                return render_sc(label, expand_in_usymp_schur(embed(g)), "sC", "sC");
            }
            return render(label, to_basis(g, parse_basis(c.basis)));
        }
        if (c.n > 0) return render(label, specialize(g, need_n()));
        return render(label, g);
    };

    if (c.object == "schurQ" || c.object == "schurP" || c.object == "sympQ" || c.object == "sympP") {
        auto [lam, mu] = parse_skew(c.shape);
        if (c.object == "schurQ" || c.object == "schurP") no_skew(mu);
        GammaElement g;
        if (c.object == "schurQ") g = schur_Q(lam);
        else if (c.object == "schurP") g = schur_P(lam);
        else if (c.object == "sympQ") g = mu.empty() ? usymp_Q(lam) : usymp_Q_skew(lam, mu);
        else g = mu.empty() ? usymp_P(lam) : usymp_P_skew(lam, mu);
        return gamma_out(g);
    }
    if (c.object == "skewQ") {
        auto [lam, mu] = parse_skew(c.shape);
        if (c.basis.empty() && c.n == 0) return render(label, coproduct_constants(lam, mu));
        return gamma_out(usymp_Q_skew(lam, mu));
    }
    if (c.object == "sC") {
        Partition mu = parse_partition(c.shape);
        LambdaElement e = usymp_schur(mu);
        if (c.n > 0) return render(label, specialize(e, need_n()));
        return render(label, e);
    }
    if (c.object == "SC") {
        auto ctx = need_n();
        return render(label, bialternant_SC(parse_partition(c.shape), ctx));
    }
    if (c.object == "PC") {
        auto ctx = need_n();
        auto [lam, mu] = parse_skew(c.shape);
        no_skew(mu);
        LaurentPoly p = specialize(usymp_P(lam), ctx);
        if (c.basis == "SC") return render_sc(label, expand_in_SC_basis(p, ctx), "SC", "SC");
        if (!c.basis.empty()) throw DomainError("PC expands only in the SC basis");
        return render(label, p);
    }
    if (c.object == "tableau-sum") {
        auto ctx = need_n();
        auto [lam, mu] = parse_skew(c.shape);
        SkewShiftedShape shape(lam, mu);
        if (!c.a.empty()) return render(label, fac_tableau_sum(shape, ctx.n, FactorialParams::parse(c.a)));
        return render(label, tableau_sum(shape, ctx.n, true));
    }
    if (c.object == "fac-Q") {
        if (c.a.empty()) throw DomainError("fac-Q needs --a");
        FactorialParams a = FactorialParams::parse(c.a);
        auto [lam, mu] = parse_skew(c.shape);
        GammaElement g = mu.empty() ? ufac_Q(lam, a) : ufac_Q_skew(lam, mu, a);
        return gamma_out(g);
    }
    throw ParseError("unknown object '" + c.object + "'");
}

Rendered expand(const std::string& product, const std::string& basis) {
    auto star = product.find('*');
    if (star == std::string::npos) throw ParseError("expected \"mu * nu\", got '" + product + "'");
    auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
    };
    StrictPartition mu = parse_strict(trim(product.substr(0, star)));
    StrictPartition nu = parse_strict(trim(product.substr(star + 1)));
    Basis b = parse_basis(basis);
    return render(product, product_in_basis(mu, nu, b));
}

void emit_report(const Report& rep, const std::string& format, bool timing, std::ostream& out) {
    if (format == "json") {
        Json j;
        j["kind"] = rep.kind;
        j["name"] = rep.name;
        j["status"] = rep.status();
        Json b = Json::object();
        for (const auto& [flag, v] : rep.bounds) b[flag] = v.size() == 1 ? Json(v[0]) : Json(v);
        j["bounds"] = b;
        j["instances"] = rep.instances;
        j["checks"] = rep.checks;
        Json f = Json::array();
        for (const auto& x : rep.failures) f.push_back({{"instance", x.instance}, {"detail", x.detail}, {"replay", x.replay}});
        j["failures"] = f;
        j["seed"] = std::to_string(rep.seed);
        if (timing) j["wall_time_s"] = rep.seconds;
        out << j.dump(2) << "\n";
        return;
    }
    out << rep.kind << " " << rep.name << ": " << rep.status() << ", " << rep.instances << " instances, " << rep.checks
        << " checks (";
    for (const auto& [flag, v] : rep.bounds) {
        out << flag << "=";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ", ";
    }
    out << "seed=" << rep.seed << ")";
    if (timing) out << " in " << rep.seconds << " s";
    out << "\n";
    for (const auto& x : rep.failures) {
        out << "FAIL [" << x.instance << "] " << x.detail << "\n";
        out << "  replay: " << x.replay << "\n";
    }
}

std::uint64_t default_seed() {
    const char* s = std::getenv("SYMPQ_SEED");
    if (!s || !*s) return 0;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError(std::string("SYMPQ_SEED is not an unsigned integer: ") + s);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symplectic P- and Q-functions: compute, expand, verify and sweep.", "sympq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sympq 0.1.0");

    ComputeArgs c;
    auto* cmd_compute = app.add_subcommand("compute", "Print one function in the requested ring or basis");
    cmd_compute->add_option("object", c.object,
                            "schurQ | schurP | sympQ | sympP | skewQ | sC | SC | PC | tableau-sum | fac-Q")
        ->required();
    cmd_compute->add_option("shape", c.shape, "partition such as 4,3,1, '-' for empty, lam/mu for skew")->required();
    cmd_compute->add_option("--n", c.n, "number of variables (Laurent image)");
    cmd_compute->add_option("--a", c.a, "factorial parameters a_0,a_1,... as rationals");
    cmd_compute->add_option("--basis", c.basis, "schurQ | schurP | sympQ | sympP | sC | SC");
    cmd_compute->add_option("--format", c.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string product, expand_basis = "sympP", expand_format = "text";
    auto* cmd_expand = app.add_subcommand("expand", "Expand a product of two basis elements");
    cmd_expand->add_option("product", product, "\"mu * nu\"")->required();
    cmd_expand->add_option("--basis", expand_basis, "schurQ | schurP | sympQ | sympP");
    cmd_expand->add_option("--format", expand_format)->check(CLI::IsMember({"text", "json"}));

    SuiteOptions opt;
    std::string suite_name, report_format = "text", n_list, seed_text;
    bool timing = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed_text, "random seed (default: SYMPQ_SEED or 0)");
        sub->add_option("--jobs", opt.jobs, "worker threads; 0 uses every core")->check(CLI::NonNegativeNumber);
        sub->add_option("--instance", opt.instance, "run a single instance by label");
        sub->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", timing, "include wall time in the report");
        sub->add_option("--max-weight", opt.max_weight);
        sub->add_option("--n", n_list, "number of variables; sweep 3b takes a list such as 2,3");
    };
    std::string verify_help = "Run a theorem's check suite:";
    for (const auto& n : verify_suites()) verify_help += " " + n;
    auto* cmd_verify = app.add_subcommand("verify", verify_help);
    cmd_verify->add_option("theorem", suite_name)->required();
    add_common(cmd_verify);
    cmd_verify->add_option("--r", opt.r);
    cmd_verify->add_option("--max-mu", opt.max_mu);
    cmd_verify->add_option("--max-r", opt.max_r);
    cmd_verify->add_option("--order", opt.order);
    cmd_verify->add_option("--points", opt.points);
    cmd_verify->add_option("--trials", opt.trials);

    auto* cmd_sweep = app.add_subcommand("sweep", "Check a conjecture's coefficients for nonnegative integrality");
    cmd_sweep->add_option("conjecture", suite_name, "1 | 2 | 3a | 3b | 4")->required();
    add_common(cmd_sweep);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (cmd_compute->parsed()) {
            emit(compute(c), c.format, out);
            return 0;
        }
        if (cmd_expand->parsed()) {
            emit(expand(product, expand_basis), expand_format, out);
            return 0;
        }
        opt.seed = default_seed();
        if (!seed_text.empty()) {
            try {
                std::size_t used = 0;
                opt.seed = std::stoull(seed_text, &used);
                if (used != seed_text.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw ParseError("--seed expects an unsigned integer, got '" + seed_text + "'");
            }
        }
        if (opt.jobs == 0) opt.jobs = std::max(1u, std::thread::hardware_concurrency());
        if (!n_list.empty()) {
            opt.ns = parse_parts(n_list);
            std::sort(opt.ns.begin(), opt.ns.end());
            if (opt.ns.size() == 1) opt.n = opt.ns[0];
            else if (cmd_verify->parsed()) throw ParseError("--n takes a single value here");
        }
        Report rep = cmd_verify->parsed() ? run_verify(suite_name, opt) : run_sweep(suite_name, opt);
        emit_report(rep, report_format, timing, out);
        return rep.ok() ? 0 : 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DivisibilityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace sympq
