#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ssmthom/format.hpp"
#include "ssmthom/projective.hpp"
#include "ssmthom/prototypes.hpp"

using json = nlohmann::ordered_json;
using namespace ssmthom;

namespace {

constexpr const char* kVersion = "ssmthom 1.0.0";

enum class Format { Text, Latex, Json };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "latex") return Format::Latex;
    if (f == "json") return Format::Json;
    throw CLI::ValidationError("--format must be text, latex or json");
}

std::string command_echo(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

void emit_text_header(const std::string& echo) {
    std::cout << "# " << kVersion << "\n# command: " << echo << "\n";
}

void emit_json(const std::string& echo, json payload) {
    json envelope;
    envelope["tool"] = kVersion;
    envelope["command"] = echo;
    envelope["format"] = "json";
    envelope["payload"] = std::move(payload);
    std::cout << envelope.dump(2) << "\n";
}

std::string render(const Poly& p, Format f) {
    return f == Format::Latex ? to_latex(p) : to_text(p);
}

int cmd_ssm(const std::string& echo, const std::string& sing_name, int ell, int nmax, Format fmt) {
    SingularityId sing = parse_singularity(sing_name);
    ClassSymbols sym = make_class_symbols(ell, nmax);

    std::vector<Poly> comps;
    for (int N = 0; N <= nmax; ++N) comps.push_back(ssm_component(sym, sing, N).poly);

    if (fmt == Format::Json) {
        json payload;
        payload["singularity"] = singularity_name(sing);
        payload["ell"] = std::to_string(ell);
        payload["nmax"] = std::to_string(nmax);
        if (sing == SingularityId::A0) payload["constant_term"] = "1";
        payload["components"] = json::array();
        for (int N = 0; N <= nmax; ++N) {
            json c;
            c["n"] = std::to_string(N);
            c["degree"] = std::to_string(ell + N);
            c["value"] = to_text(comps[N]);
            payload["components"].push_back(std::move(c));
        }
        emit_json(echo, std::move(payload));
    } else {
        emit_text_header(echo);
        if (sing == SingularityId::A0) std::cout << "deg 0: 1\n";
        for (int N = 0; N <= nmax; ++N)
            std::cout << "N=" << N << " (deg " << ell + N << "): " << render(comps[N], fmt) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& echo, int ell, std::optional<int> perturb_index, Format fmt) {
    std::optional<Perturbation> perturb;
    if (perturb_index) perturb = Perturbation{*perturb_index, Rational(1)};

    std::vector<VerificationReport> reports = verify_all(ell, perturb);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (fmt == Format::Json) {
        json payload;
        payload["ell"] = std::to_string(ell);
        if (perturb_index) payload["perturb"] = std::to_string(*perturb_index);
        payload["reports"] = json::array();
        for (const auto& r : reports) {
            json e;
            e["formula"] = singularity_name(r.formula);
            e["prototype"] = prototype_name(r.prototype);
            e["n"] = std::to_string(r.n);
            e["pass"] = r.pass;
            e["residual"] = to_text(r.residual);
            payload["reports"].push_back(std::move(e));
        }
        payload["all_pass"] = all_pass;
        emit_json(echo, std::move(payload));
    } else {
        emit_text_header(echo);
        for (const auto& r : reports) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << singularity_name(r.formula) << " @ "
                      << prototype_name(r.prototype) << " N=" << r.n;
            if (!r.pass) std::cout << " residual=" << render(r.residual, fmt);
            std::cout << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_euler(const std::string& echo, int ell, long dmin, long dmax, Format fmt) {
    std::vector<ProjectiveReport> rows;
    for (long d = dmin; d <= dmax; ++d) rows.push_back(projective_report(ell, d));

    if (fmt == Format::Json) {
        json payload;
        payload["ell"] = std::to_string(ell);
        payload["rows"] = json::array();
        for (const auto& r : rows) {
            json e;
            e["d"] = std::to_string(r.d);
            e["chi_a0"] = r.euler.at(LocusId::A0).get_str();
            e["chi_a02"] = r.euler.at(LocusId::A02).get_str();
            e["chi_a1"] = r.euler.at(LocusId::A1).get_str();
            e["chi_closure"] = r.euler.at(LocusId::Closure).get_str();
            e["degree"] = r.degree.get_str();
            payload["rows"].push_back(std::move(e));
        }
        emit_json(echo, std::move(payload));
    } else {
        emit_text_header(echo);
        for (const auto& r : rows) {
            std::cout << "d=" << r.d << " chi_a0=" << r.euler.at(LocusId::A0).get_str()
                      << " chi_a02=" << r.euler.at(LocusId::A02).get_str()
                      << " chi_a1=" << r.euler.at(LocusId::A1).get_str()
                      << " chi_closure=" << r.euler.at(LocusId::Closure).get_str()
                      << " degree=" << r.degree.get_str() << "\n";
        }
    }
    return 0;
}

std::string factors_str(const std::vector<long>& fs) {
    std::string s = "(";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fs[i]);
    }
    return s + ")";
}

int cmd_ci_check(const std::string& echo, int ell, long d, Format fmt) {
    CiReport rep = ci_feasible(ell, d);

    if (fmt == Format::Json) {
        json payload;
        payload["ell"] = std::to_string(ell);
        payload["d"] = std::to_string(d);
        payload["degree"] = rep.degree.get_str();
        payload["chi_closure"] = rep.chi_closure.get_str();
        payload["candidates"] = json::array();
        for (const auto& c : rep.candidates) {
            json e;
            e["factors"] = json::array();
            for (long f : c.factors) e["factors"].push_back(std::to_string(f));
            e["chi_ci"] = c.chi_ci.get_str();
            e["matches"] = c.matches;
            payload["candidates"].push_back(std::move(e));
        }
        payload["feasible"] = rep.any_feasible;
        if (rep.degree == 0) payload["note"] = "degree 0 admits no factorization";
        emit_json(echo, std::move(payload));
    } else {
        emit_text_header(echo);
        std::cout << "degree: " << rep.degree.get_str() << "\n";
        std::cout << "chi_closure: " << rep.chi_closure.get_str() << "\n";
        for (const auto& c : rep.candidates)
            std::cout << "candidate " << factors_str(c.factors) << ": chi_ci=" << c.chi_ci.get_str()
                      << (c.matches ? " MATCH" : " no match") << "\n";
        std::cout << "verdict: " << (rep.any_feasible ? "FEASIBLE" : "INFEASIBLE");
        if (rep.degree == 0) std::cout << " (vacuous: degree 0 admits no factorization)";
        std::cout << "\n";
    }
    return rep.any_feasible ? 1 : 0;
}

int cmd_identities(const std::string& echo, int max_size, Format fmt) {
    IdentityParams params;
    params.max_mn = max_size;
    params.max_ell = std::min(4, max_size);
    params.max_k = std::min(6, max_size);
    params.max_r = std::max(30, max_size);

    std::vector<IdentityOutcome> outcomes = identity_suite(params);
    bool all_pass = true;
    for (const auto& o : outcomes) all_pass = all_pass && o.pass;

    if (fmt == Format::Json) {
        json payload;
        payload["max_size"] = std::to_string(max_size);
        payload["families"] = json::array();
        for (const auto& o : outcomes) {
            json e;
            e["family"] = std::string(1, o.family);
            e["description"] = o.description;
            e["cases"] = std::to_string(o.cases);
            e["pass"] = o.pass;
            payload["families"].push_back(std::move(e));
        }
        payload["all_pass"] = all_pass;
        emit_json(echo, std::move(payload));
    } else {
        emit_text_header(echo);
        for (const auto& o : outcomes)
            std::cout << (o.pass ? "PASS" : "FAIL") << " (" << o.family << ") " << o.description
                      << " [" << o.cases << " cases]\n";
        std::cout << (all_pass ? "all identities hold" : "identity FAILURE") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multisingularity class calculator"};
    app.require_subcommand(1);
    const std::string echo = command_echo(argc, argv);

    std::string format = "text";
    app.add_option("--format", format, "output format: text, latex or json")
        ->capture_default_str();

    // ssm
    auto* ssm = app.add_subcommand("ssm", "print the class series of a singularity");
    std::string sing_name;
    int ssm_ell = 1, ssm_nmax = 0;
    ssm->add_option("singularity", sing_name, "A0, A02 or A1")->required();
    ssm->add_option("--ell", ssm_ell, "codimension (>= 1)")->required()->check(CLI::PositiveNumber);
    ssm->add_option("--nmax", ssm_nmax, "truncation codegree (0 <= nmax < ell)")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check the series against all model germs");
    int verify_ell = 1;
    std::optional<int> perturb_index;
    verify->add_option("--ell", verify_ell, "codimension (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--perturb", perturb_index,
                       "negative control: add 1 to the given coefficient of the A02 series");

    // euler
    auto* euler = app.add_subcommand("euler", "Euler characteristics of the projective loci");
    int euler_ell = 1;
    long dmin = 1, dmax = 5;
    euler->add_option("--ell", euler_ell, "codimension (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    euler->add_option("--dmin", dmin, "smallest map degree")->check(CLI::PositiveNumber);
    euler->add_option("--dmax", dmax, "largest map degree")->check(CLI::PositiveNumber);

    // ci-check
    auto* ci = app.add_subcommand("ci-check",
                                  "test the image closure against complete intersections");
    int ci_ell = 2;
    long ci_d = 1;
    ci->add_option("--ell", ci_ell, "codimension (>= 2)")->required();
    ci->add_option("--d", ci_d, "map degree (>= 1)")->required()->check(CLI::PositiveNumber);

    // identities
    auto* ident = app.add_subcommand("identities", "run the supporting algebraic identity suite");
    int max_size = 8;
    ident->add_option("--max-size", max_size, "sweep bound for the identity families")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // asked for help vs. usage error
    }

    try {
        const Format fmt = parse_format(format);

        if (ssm->parsed()) {
            if (ssm_nmax < 0 || ssm_nmax >= ssm_ell) {
                std::cerr << "error: nmax must satisfy 0 <= nmax < ell (got nmax=" << ssm_nmax
                          << ", ell=" << ssm_ell << ")\n";
                return 2;
            }
            return cmd_ssm(echo, sing_name, ssm_ell, ssm_nmax, fmt);
        }
        if (verify->parsed()) {
            if (perturb_index && (*perturb_index < 0 || *perturb_index >= perturbation_slots(verify_ell))) {
                std::cerr << "error: --perturb must be in [0, " << perturbation_slots(verify_ell)
                          << ") for ell=" << verify_ell << "\n";
                return 2;
            }
            return cmd_verify(echo, verify_ell, perturb_index, fmt);
        }
        if (euler->parsed()) {
            if (dmin > dmax) {
                std::cerr << "error: --dmin must not exceed --dmax\n";
                return 2;
            }
            return cmd_euler(echo, euler_ell, dmin, dmax, fmt);
        }
        if (ci->parsed()) {
            if (ci_ell < 2) {
                std::cerr << "error: ci-check requires ell >= 2\n";
                return 2;
            }
            return cmd_ci_check(echo, ci_ell, ci_d, fmt);
        }
        if (ident->parsed()) return cmd_identities(echo, max_size, fmt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
