#include "dahaknots/cli_config.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dahaknots/errors.hpp"
#include "dahaknots/verify.hpp"

namespace dahaknots {

std::vector<std::pair<std::int64_t, std::int64_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::stringstream ss(text);
    std::string chunk;
    while (std::getline(ss, chunk, ';')) {
        auto comma = chunk.find(',');
        if (comma == std::string::npos)
            throw usage_error("malformed pair '" + chunk + "' (expected r,s)");
        try {
            std::int64_t r = std::stoll(chunk.substr(0, comma));
            std::int64_t s = std::stoll(chunk.substr(comma + 1));
            if (std::gcd(r, s) != 1)
                throw usage_error("pair '" + chunk + "': gcd(" + std::to_string(r) + "," +
                                  std::to_string(s) + ") != 1");
            out.emplace_back(r, s);
        } catch (const std::invalid_argument&) {
            throw usage_error("malformed pair '" + chunk + "' (expected integers r,s)");
        } catch (const std::out_of_range&) {
            throw usage_error("pair '" + chunk + "' out of range");
        }
    }
    if (out.empty()) throw usage_error("empty pair list");
    return out;
}

namespace {

struct ParseState {
    std::string pairs_text;
    std::string convention = "topological";
    std::string family = "cherednik";
    std::string format = "text";
    std::string output;
};

Convention convention_from(const std::string& s) {
    if (s == "topological") return Convention::Topological;
    if (s == "newton") return Convention::Newton;
    throw usage_error("unknown convention '" + s + "'");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exact two-variable cable polynomials with a colored-Jones cross-check"};
    app.require_subcommand(1);

    RunConfig cfg;
    ParseState st;

    auto add_common = [&](CLI::App* sub, bool with_pairs) {
        sub->add_option("--n", cfg.n, "color (dimension label), n >= 1");
        if (with_pairs)
            sub->add_option("--pairs", st.pairs_text,
                            "semicolon-separated integer pairs, e.g. 2,3;2,5");
        sub->add_option("--convention", st.convention, "topological|newton");
        sub->add_option("--format", st.format, "text|json");
        sub->add_option("--output", st.output, "write the report to this path");
    };

    CLI::App* mac = app.add_subcommand("macdonald", "print a Macdonald polynomial");
    add_common(mac, false);
    CLI::App* torus = app.add_subcommand("torus", "torus-knot polynomial");
    add_common(torus, false);
    torus->add_option("--r", cfg.torus_r, "first entry of the coprime pair");
    torus->add_option("--s", cfg.torus_s, "second entry of the coprime pair");
    torus->add_option("--family", st.family, "cherednik|sign");
    CLI::App* iter = app.add_subcommand("iterated", "iterated-cable polynomial");
    add_common(iter, true);
    CLI::App* cd = app.add_subcommand("cd", "Newton-pair variant polynomial");
    add_common(cd, true);
    CLI::App* oracle = app.add_subcommand("oracle", "colored Jones via the cabling sum");
    add_common(oracle, true);
    CLI::App* verify = app.add_subcommand("verify", "check a family against the oracle");
    add_common(verify, true);
    verify->add_flag("--corrupt-prefactor", cfg.corrupt_prefactor,
                     "test fixture: tamper with the value before comparing")
        ->group("");  // hidden
    app.add_subcommand("selftest", "run the module invariant suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    if (mac->parsed()) cfg.command = Command::Macdonald;
    else if (torus->parsed()) cfg.command = Command::Torus;
    else if (iter->parsed()) cfg.command = Command::Iterated;
    else if (cd->parsed()) cfg.command = Command::CD;
    else if (oracle->parsed()) cfg.command = Command::Oracle;
    else if (verify->parsed()) cfg.command = Command::Verify;
    else cfg.command = Command::Selftest;

    if (cfg.command == Command::Torus) {
        if (std::gcd(cfg.torus_r, cfg.torus_s) != 1)
            throw usage_error("--r --s: gcd(" + std::to_string(cfg.torus_r) + "," +
                              std::to_string(cfg.torus_s) + ") != 1");
        if (st.family == "cherednik") cfg.family = Family::Cherednik;
        else if (st.family == "sign") cfg.family = Family::Sign;
        else throw usage_error("unknown family '" + st.family + "'");
    }
    bool needs_pairs = cfg.command == Command::Iterated || cfg.command == Command::CD ||
                       cfg.command == Command::Oracle || cfg.command == Command::Verify;
    if (needs_pairs) {
        if (st.pairs_text.empty()) throw usage_error("--pairs is required");
        cfg.pairs.pairs = parse_pairs(st.pairs_text);
        cfg.pairs.convention = convention_from(st.convention);
    }
    bool has_n = cfg.command != Command::Macdonald && cfg.command != Command::Selftest;
    if (has_n && cfg.n < 1) throw usage_error("--n must be >= 1");
    if (cfg.command == Command::Macdonald && cfg.n < 0)
        throw usage_error("--n must be >= 0");

    if (st.format == "text") cfg.format = OutputFormat::Text;
    else if (st.format == "json") cfg.format = OutputFormat::Json;
    else throw usage_error("unknown format '" + st.format + "'");
    if (!st.output.empty()) cfg.output_path = st.output;
    return cfg;
}

namespace {

using nlohmann::json;

json ratqt_to_json(const RatQT& v) {
    auto terms = [](const LaurentQT& p) {
        json arr = json::array();
        for (const auto& [e, c] : p.terms()) arr.push_back({e.q, e.t, c.get_str()});
        return arr;
    };
    return json{{"num", terms(v.num())}, {"den", terms(v.den())}};
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Cherednik: return "cherednik";
        case Family::Sign: return "sign";
        case Family::Iterated: return "iterated";
        case Family::CD: return "cd";
    }
    return "?";
}

json pairs_to_json(const CableSpec& spec) {
    json arr = json::array();
    for (const auto& [r, s] : spec.pairs) arr.push_back({r, s});
    return arr;
}

void emit_value_report(const RunConfig& cfg, const std::string& family,
                       const RatQT& value, std::ostream& out,
                       const std::optional<RatQT>& depth1_ratio = std::nullopt) {
    if (cfg.format == OutputFormat::Json) {
        json j{{"family", family},
               {"n", cfg.n},
               {"pairs", pairs_to_json(cfg.pairs)},
               {"convention",
                cfg.pairs.convention == Convention::Newton ? "newton" : "topological"},
               {"value", ratqt_to_json(value)},
               {"verify", nullptr}};
        if (depth1_ratio) j["cherednik_ratio"] = ratqt_to_json(*depth1_ratio);
        out << j.dump() << "\n";
    } else {
        out << "family: " << family << "\n";
        out << "n: " << cfg.n << "\n";
        if (!cfg.pairs.pairs.empty()) out << "pairs: " << cfg.pairs.to_text() << "\n";
        out << "value: " << value.to_text() << "\n";
        if (depth1_ratio)
            out << "cherednik_ratio: " << depth1_ratio->to_text() << "\n";
    }
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
        case Command::Selftest:
            return run_selftest() ? 0 : 3;
        case Command::Macdonald: {
            SymPoly p = macdonald_poly(cfg.n);
            if (cfg.format == OutputFormat::Json) {
                json terms = json::array();
                for (const auto& [k, c] : p.coeffs()) terms.push_back({k, ratqt_to_json(c)});
                out << json{{"family", "macdonald"}, {"n", cfg.n}, {"value_m", terms}}.dump()
                    << "\n";
            } else {
                out << "p_" << cfg.n << " = " << p.to_text() << "\n";
            }
            return 0;
        }
        case Command::Torus: {
            RatQT v = cfg.family == Family::Sign
                          ? sign_torus(cfg.n, cfg.torus_r, cfg.torus_s)
                          : cherednik_torus(cfg.n, cfg.torus_r, cfg.torus_s);
            RunConfig shown = cfg;
            shown.pairs.pairs = {{cfg.torus_r, cfg.torus_s}};
            emit_value_report(shown, family_name(cfg.family), v, out);
            return 0;
        }
        case Command::Iterated: {
            RatQT v = iterated_topological(cfg.n, cfg.pairs);
            std::optional<RatQT> ratio;
            if (cfg.pairs.pairs.size() == 1 && cfg.pairs.convention == Convention::Topological) {
                // Depth one: report the normalization relating this family
                // to the torus-knot polynomial (not asserted anywhere).
                RatQT c = cherednik_torus(cfg.n, cfg.pairs.pairs[0].first,
                                          cfg.pairs.pairs[0].second);
                if (!c.is_zero()) ratio = v / c;
            }
            emit_value_report(cfg, "iterated", v, out, ratio);
            return 0;
        }
        case Command::CD: {
            CableSpec spec = cfg.pairs;
            spec.convention = Convention::Newton;
            emit_value_report(cfg, "cd", cd_newton(cfg.n, spec), out);
            return 0;
        }
        case Command::Oracle: {
            emit_value_report(cfg, "oracle", oracle_jones(cfg.n, cfg.pairs).to_ratqt(), out);
            return 0;
        }
        case Command::Verify: {
            bool newton_route = cfg.pairs.convention == Convention::Newton;
            RatQT value;
            LaurentQ oracle = oracle_jones(cfg.n, cfg.pairs);
            if (newton_route) {
                value = cd_newton(cfg.n, cfg.pairs);
            } else {
                value = iterated_topological(cfg.n, cfg.pairs);
            }
            if (cfg.corrupt_prefactor) value *= RatQT::signed_q_power(1);
            VerifyReport rep = verify_values(value, oracle, newton_route);
            if (cfg.format == OutputFormat::Json) {
                json v{{"match", rep.match},
                       {"sign", rep.match ? rep.sign : 0},
                       {"monomial_k",
                        rep.monomial_k ? json(*rep.monomial_k) : json(nullptr)}};
                json j{{"family", newton_route ? "cd" : "iterated"},
                       {"n", cfg.n},
                       {"pairs", pairs_to_json(cfg.pairs)},
                       {"convention", newton_route ? "newton" : "topological"},
                       {"value", ratqt_to_json(rep.specialized.to_ratqt())},
                       {"verify", v}};
                if (!rep.match) j["diff"] = rep.diff;
                out << j.dump() << "\n";
            } else {
                out << "family: " << (newton_route ? "cd" : "iterated") << "\n";
                out << "n: " << cfg.n << "\n";
                out << "pairs: " << cfg.pairs.to_text() << "\n";
                out << "specialized: " << rep.specialized.to_text() << "\n";
                out << "oracle: " << rep.oracle.to_text() << "\n";
                if (rep.match) {
                    out << "match: yes, sign " << (rep.sign > 0 ? "+1" : "-1");
                    if (rep.monomial_k) out << ", q^" << *rep.monomial_k;
                    out << "\n";
                } else {
                    out << "match: no\n" << rep.diff << "\n";
                }
            }
            return rep.match ? 0 : 1;
        }
    }
    throw internal_error("execute: unhandled command");
}

std::string usage_text() {
    return "commands: macdonald | torus | iterated | cd | oracle | verify | selftest\n"
           "exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal error\n";
}

}  // namespace dahaknots
