#ifndef ABELREG_CLI_HPP
#define ABELREG_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <abelreg/io.hpp>
#include <abelreg/oracle.hpp>
#include <abelreg/selftest.hpp>

namespace abelreg {

// Exit codes: 0 success, 1 domain errors, 2 malformed input files,
// 3 invariant violations surfaced by `bounds` or `validate`.

namespace cli {

using ojson = nlohmann::ordered_json;

class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

// Default output is tab-separated key/value lines; --json emits one stable
// JSON document instead.
class Printer {
public:
    Printer(bool as_json, std::ostream& out) : json_(as_json), out_(out) {}

    void kv(const std::string& key, const std::string& value) {
        if (json_) doc_[key] = value;
        else out_ << key << '\t' << value << '\n';
    }
    void kv(const std::string& key, long long value) {
        if (json_) doc_[key] = value;
        else out_ << key << '\t' << value << '\n';
    }
    void kv(const std::string& key, bool value) {
        if (json_) doc_[key] = value;
        else out_ << key << '\t' << (value ? "true" : "false") << '\n';
    }
    void raw(const std::string& key, ojson value) {
        if (json_) doc_[key] = std::move(value);
    }
    void line(const std::string& text) {
        if (!json_) out_ << text << '\n';
    }
    void finish() {
        if (json_) out_ << doc_.dump(2) << '\n';
    }

private:
    bool json_;
    std::ostream& out_;
    ojson doc_;
};

inline ojson per_i_json(const RegularityCertificate& cert) {
    ojson per = ojson::array();
    for (const auto& e : cert.per_i) {
        ojson entry;
        entry["i"] = e.i;
        if (e.degenerate) entry["degenerate"] = true;
        else entry["index"] = e.index;
        per.push_back(std::move(entry));
    }
    return per;
}

inline std::string per_i_line(const RegularityCertificate& cert) {
    std::string s;
    for (const auto& e : cert.per_i) {
        if (!s.empty()) s += ",";
        s += std::to_string(e.i) + ":" + (e.degenerate ? "degenerate" : std::to_string(e.index));
    }
    return s;
}

inline void print_certificate(Printer& p, const RegularityCertificate& cert) {
    p.kv("value", cert.value);
    p.kv("lower_witness", cert.lower_witness);
    p.kv("upper_witness", cert.upper_witness);
    p.line("per_i\t" + per_i_line(cert));
    p.raw("per_i", per_i_json(cert));
}

struct Args {
    bool json = false;
    std::string model_file, class_file, gamma_file, eta_file, bundle_file;
    std::string from_file, to_file, spec_file, suite;
    long long genus = 0, rank = 0, level = 0, theta_power = 0;
    std::uint64_t seed = 0;
    bool cross_check = false, formula_check = false;
};

inline int cmd_index(const Args& a, std::ostream& out) {
    auto model = load_model(a.model_file);
    auto cls = load_class(a.class_file, model);
    Inertia in = inertia(to_matrix(cls));
    Printer p(a.json, out);
    p.kv("negatives", static_cast<long long>(in.negatives));
    p.kv("zeros", static_cast<long long>(in.zeros));
    p.kv("positives", static_cast<long long>(in.positives));
    bool nondeg = in.zeros == 0;
    p.kv("nondegenerate", nondeg);
    if (nondeg) p.kv("index", static_cast<long long>(in.negatives));
    else p.kv("index", std::string("degenerate"));
    p.finish();
    return 0;
}

inline int cmd_rho(const Args& a, std::ostream& out) {
    auto model = load_model(a.model_file);
    auto gamma = load_class(a.gamma_file, model);
    auto eta = load_class(a.eta_file, model);
    auto cert = regularity(gamma, eta, search_options_from_env());
    Printer p(a.json, out);
    print_certificate(p, cert);
    p.finish();
    return 0;
}

inline int cmd_creg(const Args& a, std::ostream& out) {
    auto model = load_model(a.model_file);
    auto bundle = load_bundle(a.bundle_file, model);
    auto eta = load_class(a.eta_file, model);
    auto cert = creg_certificate(bundle, eta, search_options_from_env());
    Printer p(a.json, out);
    p.kv("creg", cert.value);
    print_certificate(p, cert);
    p.finish();
    return 0;
}

inline int cmd_bounds(const Args& a, std::ostream& out) {
    auto model = load_model(a.model_file);
    auto bundle = load_bundle(a.bundle_file, model);
    auto eta = load_class(a.eta_file, model);
    auto r = check_bounds(bundle, eta, search_options_from_env());
    Printer p(a.json, out);
    p.kv("creg", r.creg);
    p.kv("gv_threshold", r.gv_threshold);
    p.kv("threshold_bound_holds", r.threshold_bound_holds);
    p.kv("proportional", r.proportional);
    p.kv("threshold_equality_expected", r.threshold_equality_expected);
    p.kv("gv", r.gv);
    p.kv("dimension_bound_holds", r.dimension_bound_holds);
    p.kv("dual_twist_ample", r.dual_twist_ample);
    p.kv("dimension_equality_expected", r.dimension_equality_expected);
    ojson violations = ojson::array();
    for (const auto& v : r.violations) {
        violations.push_back(v);
        p.line("violation\t" + v);
    }
    p.raw("violations", std::move(violations));
    p.finish();
    if (!r.violations.empty()) throw InvariantViolation(r.violations.front());
    return 0;
}

inline int cmd_verlinde(const Args& a, std::ostream& out) {
    VerlindeSpec spec{a.genus, Int(a.rank), Int(a.level), Int(a.theta_power)};
    long long value = verlinde_creg(spec);
    auto bounds = verlinde_reg_bounds(spec);
    Printer p(a.json, out);
    p.kv("creg", value);
    p.kv("reg_lower", bounds.lower);
    p.kv("reg_upper", bounds.upper);
    p.kv("reg_exact", bounds.exact);
    if (a.cross_check) {
        auto vm = verlinde_descriptor(spec);
        long long engine = creg(vm.bundle, vm.eta, search_options_from_env());
        p.kv("engine_creg", engine);
        p.kv("cross_check", value == engine ? std::string("ok") : std::string("mismatch"));
        if (value != engine)
            throw InvariantViolation("closed form and engine disagree");
    }
    p.finish();
    return 0;
}

inline int cmd_product(const Args& a, std::ostream& out) {
    auto spec = load_product_spec(a.spec_file);
    auto pm = product_model(spec);
    auto opts = search_options_from_env();
    Printer p(a.json, out);
    p.kv("dim", static_cast<long long>(pm.model->dim()));
    p.kv("rank", to_string(pm.bundle.rank));
    long long engine = creg(pm.bundle, pm.eta, opts);
    p.kv("creg", engine);
    if (a.formula_check) {
        std::vector<EllipticFactor> factors;
        std::vector<long long> factor_cregs;
        for (const auto& f : spec.factors) {
            if (f.model->dim() != 1)
                throw std::domain_error("formula check needs elliptic factors");
            Rational degree = to_matrix(f.polarization).entries()(0, 0).re;
            if (!is_integer(degree) || degree.sign() <= 0)
                throw std::domain_error("factor polarization degree must be a positive integer");
            Rational slope = to_matrix(slope_class(f.bundle)).entries()(0, 0).re;
            factors.push_back({f.bundle.rank, slope, numerator(degree)});
            factor_cregs.push_back(elliptic_factor_creg(slope, numerator(degree)));
        }
        std::string cregs_line;
        ojson cregs = ojson::array();
        for (long long c : factor_cregs) {
            cregs.push_back(c);
            cregs_line += (cregs_line.empty() ? "" : ",") + std::to_string(c);
        }
        p.kv("factor_cregs", cregs_line);
        p.raw("factor_cregs", std::move(cregs));
        long long oracle = kunneth_creg(factors);
        p.kv("kunneth", oracle);
        p.kv("kunneth_match", oracle == engine);
        if (factors.size() == 2) {
            long long formula = elliptic_product_creg(factor_cregs[0], factor_cregs[1]);
            p.kv("formula", formula);
            p.kv("formula_match", formula == engine);
        }
        if (oracle != engine) throw InvariantViolation("oracle and engine disagree");
    }
    p.finish();
    return 0;
}

inline int cmd_scan(const Args& a, std::ostream& out) {
    auto model = load_model(a.model_file);
    auto from = load_class(a.from_file, model);
    auto to = load_class(a.to_file, model);
    auto report = scan_segment(from, to);
    Printer p(a.json, out);
    p.kv("critical_count", static_cast<long long>(report.critical_params.size()));
    ojson critical = ojson::array();
    for (const auto& r : report.critical_params) {
        p.line("critical\t" + to_string(r.lo) + "\t" + to_string(r.hi) + "\t" +
               std::to_string(r.multiplicity));
        ojson e;
        e["lo"] = to_string(r.lo);
        e["hi"] = to_string(r.hi);
        e["multiplicity"] = r.multiplicity;
        critical.push_back(std::move(e));
    }
    p.raw("critical_params", std::move(critical));
    ojson chambers = ojson::array();
    for (const auto& c : report.intervals) {
        p.line("chamber\t" + to_string(c.t_lo) + "\t" + to_string(c.t_hi) + "\tsample=" +
               to_string(c.sample) + "\tindex=" + std::to_string(c.index));
        ojson e;
        e["from"] = to_string(c.t_lo);
        e["to"] = to_string(c.t_hi);
        e["sample"] = to_string(c.sample);
        e["index"] = c.index;
        chambers.push_back(std::move(e));
    }
    p.raw("chambers", std::move(chambers));
    p.finish();
    return 0;
}

inline int cmd_validate(const Args& a, std::ostream& out) {
    auto results = run_selftest(a.suite, a.seed);
    int failures = 0;
    ojson doc = ojson::array();
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        if (a.json) {
            ojson e;
            e["suite"] = r.suite;
            e["property"] = r.name;
            e["pass"] = r.pass;
            if (!r.detail.empty()) e["detail"] = r.detail;
            doc.push_back(std::move(e));
        } else {
            out << (r.pass ? "PASS" : "FAIL") << '\t' << r.suite << '.' << r.name;
            if (!r.detail.empty()) out << '\t' << r.detail;
            out << '\n';
        }
    }
    if (a.json) out << doc.dump(2) << '\n';
    if (failures > 0) {
        throw InvariantViolation(std::to_string(failures) + " properties failed");
    }
    return 0;
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact continuous CM-regularity of semihomogeneous bundles "
                 "on abelian varieties from rational Chern data"};
    app.require_subcommand(1);
    cli::Args a;
    app.add_flag("--json", a.json, "emit a JSON document instead of key/value lines");

    auto* index = app.add_subcommand("index", "inertia and index of a class");
    index->add_option("--model", a.model_file, "model file")->required();
    index->add_option("--class", a.class_file, "class file")->required();

    auto* rho = app.add_subcommand("rho", "minimal obstruction-free twist of a class");
    rho->add_option("--model", a.model_file, "model file")->required();
    rho->add_option("--gamma", a.gamma_file, "class file")->required();
    rho->add_option("--eta", a.eta_file, "ample polarization class file")->required();

    auto* creg = app.add_subcommand("creg", "continuous CM-regularity of a bundle");
    creg->add_option("--model", a.model_file, "model file")->required();
    creg->add_option("--bundle", a.bundle_file, "bundle file")->required();
    creg->add_option("--eta", a.eta_file, "ample polarization class file")->required();

    auto* bounds = app.add_subcommand("bounds", "regularity bounds and sharpness report");
    bounds->add_option("--model", a.model_file, "model file")->required();
    bounds->add_option("--bundle", a.bundle_file, "bundle file")->required();
    bounds->add_option("--eta", a.eta_file, "ample polarization class file")->required();

    auto* verlinde = app.add_subcommand("verlinde", "Verlinde bundle regularity on a Jacobian");
    verlinde->add_option("--genus", a.genus, "curve genus")->required();
    verlinde->add_option("--rank", a.rank, "rank r")->required();
    verlinde->add_option("--level", a.level, "level k")->required();
    verlinde->add_option("--theta-power", a.theta_power, "polarization s*Theta, s >= 2")
        ->required();
    verlinde->add_flag("--cross-check", a.cross_check, "recompute through the general engine");

    auto* product = app.add_subcommand("product", "box product across declared factors");
    product->add_option("--spec", a.spec_file, "product spec file")->required();
    product->add_flag("--formula-check", a.formula_check,
                      "compare against the elliptic formula and Kunneth oracle");

    auto* scan = app.add_subcommand("scan", "chamber structure along a segment");
    scan->add_option("--model", a.model_file, "model file")->required();
    scan->add_option("--from", a.from_file, "class file")->required();
    scan->add_option("--to", a.to_file, "class file")->required();

    auto* validate = app.add_subcommand("validate", "run the property suites");
    validate->add_option("--suite", a.suite,
                         "one of exactlinalg, nsmodel, regularity, bundles, catalogs, oracle");
    validate->add_option("--seed", a.seed, "random seed (default 0)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (index->parsed()) return cli::cmd_index(a, out);
        if (rho->parsed()) return cli::cmd_rho(a, out);
        if (creg->parsed()) return cli::cmd_creg(a, out);
        if (bounds->parsed()) return cli::cmd_bounds(a, out);
        if (verlinde->parsed()) return cli::cmd_verlinde(a, out);
        if (product->parsed()) return cli::cmd_product(a, out);
        if (scan->parsed()) return cli::cmd_scan(a, out);
        if (validate->parsed()) return cli::cmd_validate(a, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const cli::InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        // failed internal invariants, e.g. a provably-real quantity acquiring
        // an imaginary part
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace abelreg

#endif
