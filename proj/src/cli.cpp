#include "equising/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equising/abhyankar.hpp"
#include "equising/canon.hpp"
#include "equising/enumalg.hpp"
#include "equising/json_io.hpp"
#include "equising/poly_text.hpp"

namespace equising::cli {

namespace {

using nlohmann::json;

constexpr long long kDefaultMaxDegree = 4096;

long long max_degree_cap() {
    const char* env = std::getenv("EQUISING_MAX_DEGREE");
    if (!env || !*env) return kDefaultMaxDegree;
    try {
        return std::stoll(env);
    } catch (const std::exception&) {
        throw std::invalid_argument("EQUISING_MAX_DEGREE is not an integer");
    }
}

std::vector<Int> parse_generators(const std::vector<std::string>& tokens) {
    std::vector<Int> gens;
    for (const auto& tok : tokens) {
        std::string piece;
        std::istringstream is(tok);
        while (std::getline(is, piece, ',')) {
            std::istringstream ws(piece);
            std::string word;
            while (ws >> word) {
                try {
                    gens.emplace_back(word);
                } catch (const std::invalid_argument&) {
                    throw std::invalid_argument("bad generator '" + word + "'");
                }
            }
        }
    }
    if (gens.empty()) throw std::invalid_argument("no generators given");
    return gens;
}

// POLY arguments: "-" for standard input, a .poly file path, else inline text.
BiPoly load_poly(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (arg.size() > 5 && arg.rfind(".poly") == arg.size() - 5) {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = arg;
    }
    try {
        return parse_poly(text, max_degree_cap());
    } catch (const ParseError& e) {
        if (std::string(e.what()).find("parse cap") != std::string::npos)
            throw std::invalid_argument("input y-degree exceeds EQUISING_MAX_DEGREE (" +
                                        std::to_string(max_degree_cap()) + ")");
        throw;
    }
}

struct Emitter {
    bool json_mode = false;
    std::ostream& out;
    std::ostream& err;

    void result_text(const std::string& line) const {
        if (!json_mode) out << line << '\n';
    }
    void result_json(const json& j) const {
        if (json_mode) out << j.dump() << '\n';
    }
    int error(int code, const std::string& msg) const {
        if (json_mode) out << json{{"error", msg}}.dump() << '\n';
        err << "error: " << msg << '\n';
        return code;
    }
};

std::string pairs_text(const std::vector<std::pair<Int, Int>>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ' ';
        os << '(' << ps[i].first.get_str() << ',' << ps[i].second.get_str() << ')';
    }
    return os.str();
}

int cmd_validate(const Emitter& em, const std::vector<Int>& gens) {
    const ValidationReport rep = validate(gens);
    if (!rep.valid) {
        json j = to_json(rep);
        std::ostringstream os;
        os << "invalid:";
        for (const auto& f : rep.failures) os << ' ' << f.to_string();
        em.result_text(os.str());
        em.result_json(j);
        return 1;
    }
    const SemigroupData s = derive_char(gens);
    json j = to_json(s);
    j["valid"] = true;
    em.result_text("valid; conductor " + s.conductor->get_str());
    em.result_json(j);
    return 0;
}

int cmd_canonical(const Emitter& em, const std::vector<Int>& gens) {
    const SemigroupData s = derive_char(gens);
    const CanonicalElement ce = canonical_element(s);
    em.result_text(ce.nested_text());
    json thetas = json::array();
    for (const auto& th : ce.theta) {
        json t = json::array();
        for (const Int& v : th) t.push_back(json_int(v));
        thetas.push_back(t);
    }
    em.result_json({{"generators", to_json(s)["generators"]},
                    {"theta", thetas},
                    {"nested", ce.nested_text()},
                    {"expanded", to_string(ce.polynomial())}});
    return 0;
}

int cmd_generic(const Emitter& em, const std::vector<Int>& gens, long long xdeg_bound) {
    const SemigroupData s = derive_char(gens);
    const GenericForm f = generic_form(s);
    if (!em.json_mode) {
        em.out << f.nested_text() << '\n';
        for (std::size_t k = 1; k <= f.levels.size(); ++k) {
            const auto& lvl = f.levels[k - 1];
            em.out << "  a" << k << " != 0; F" << k << ": free sum over monomials with";
            for (const auto& c : lvl.constraints) {
                em.out << " [i=" << c.i.get_str() << ":";
                for (std::size_t j = 0; j < c.coeffs.size(); ++j)
                    em.out << (j ? " + " : " ") << c.coeffs[j].get_str() << "*t" << j;
                em.out << " > " << c.rhs.get_str() << "]";
            }
            em.out << '\n';
        }
        if (xdeg_bound >= 0) {
            for (std::size_t k = 1; k <= f.levels.size(); ++k) {
                const auto& lvl = f.levels[k - 1];
                for (const auto& c : lvl.constraints) {
                    em.out << "  E(" << k << "," << c.i.get_str() << ",2) up to x^"
                           << xdeg_bound << ":";
                    const auto mons = enumerate_E(s, static_cast<int>(k), c.i,
                                                  int_of(xdeg_bound), 2);
                    for (const auto& th : mons) {
                        em.out << " (";
                        for (std::size_t j = 0; j < th.size(); ++j)
                            em.out << (j ? "," : "") << th[j].get_str();
                        em.out << ')';
                    }
                    em.out << '\n';
                }
            }
        }
    }
    json j = to_json(f);
    j["nested"] = f.nested_text();
    em.result_json(j);
    return 0;
}

int cmd_sample(const Emitter& em, const std::vector<Int>& gens, std::uint64_t seed,
               int terms, long long coeff_bound) {
    const SemigroupData s = derive_char(gens);
    const BiPoly p = sample_member(s, seed, terms, int_of(coeff_bound));
    em.result_text(to_string(p));
    em.result_json({{"poly", to_string(p)},
                    {"seed", seed},
                    {"terms", terms},
                    {"json", to_json(p)}});
    return 0;
}

int cmd_enumerate(const Emitter& em, const Int& m, bool with_canonical) {
    const auto classes = enumerate_semigroups(m);
    json arr = json::array();
    for (const auto& s : classes) {
        json entry{{"generators", to_json(s)["generators"]},
                   {"puiseuxPairs", json::array()}};
        for (const auto& [a, b] : puiseux_pairs(s))
            entry["puiseuxPairs"].push_back({json_int(a), json_int(b)});
        std::string line = generators_text(s);
        if (with_canonical) {
            const CanonicalElement ce = canonical_element(s);
            entry["canonical"] = ce.nested_text();
            line += " : " + ce.nested_text();
        }
        em.result_text(line);
        arr.push_back(entry);
    }
    if (!em.json_mode && classes.empty()) em.err << "no classes (milnor " << m.get_str()
                                                 << ")\n";
    em.result_json({{"milnor", json_int(m)}, {"classes", arr}});
    return 0;
}

int cmd_irreducible(const Emitter& em, const BiPoly& p) {
    const CriterionTrace tr = is_irreducible(p);
    em.result_json(to_json(tr));
    if (tr.irreducible) {
        std::ostringstream os;
        os << "irreducible r =";
        for (const Int& v : tr.r) os << ' ' << v.get_str();
        em.result_text(os.str());
        return 0;
    }
    em.result_text("reducible: " + tr.reason);
    return 1;
}

int cmd_semigroup_of(const Emitter& em, const BiPoly& p) {
    const CriterionTrace tr = is_irreducible(p);
    if (!tr.irreducible) return em.error(1, "reducible polynomial: " + tr.reason);
    const SemigroupData s = semigroup_of(tr);
    em.result_text(generators_text(s));
    em.result_json(to_json(s));
    return 0;
}

int cmd_milnor(const Emitter& em, const BiPoly& p) {
    const CriterionTrace tr = is_irreducible(p);
    if (!tr.irreducible) return em.error(1, "reducible polynomial: " + tr.reason);
    const Int mu = milnor(p, tr);
    em.result_text(mu.get_str());
    em.result_json({{"milnor", json_int(mu)}});
    return 0;
}

int cmd_intersect(const Emitter& em, const BiPoly& a, const BiPoly& b) {
    const XOrder v = int_mult(a, b);
    em.result_text(v.to_string());
    em.result_json({{"intersection", v.is_finite() ? json(v.value()) : json("infinity")}});
    return 0;
}

int cmd_puiseux(const Emitter& em, const std::vector<Int>& gens) {
    const ValidationReport rep = validate(gens);
    if (!rep.valid) {
        std::ostringstream os;
        os << "invalid semigroup:";
        for (const auto& f : rep.failures) os << ' ' << f.to_string();
        return em.error(1, os.str());
    }
    const SemigroupData s = derive_char(gens);
    const auto ps = puiseux_pairs(s);
    em.result_text(pairs_text(ps));
    json arr = json::array();
    for (const auto& [a, b] : ps) arr.push_back({json_int(a), json_int(b)});
    em.result_json({{"puiseuxPairs", arr}});
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact equisingularity data of irreducible plane curve singularities"};
    app.require_subcommand(1);

    // JSON is honored on every code path, including command lines that fail
    // to parse, so detect the flag up front as well.
    bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", json_mode, "emit JSON on stdout");
        return sub;
    };

    std::vector<std::string> gens_args;
    std::string poly_arg, poly_arg2, m_arg;
    long long xdeg_bound = -1;
    std::uint64_t seed = 0;
    int terms = 0;
    long long coeff_bound = 5;
    bool with_canonical = false;

    auto* c_validate = common(app.add_subcommand("validate", "check a generator sequence"));
    c_validate->add_option("gens", gens_args, "generators (space or comma separated)")
        ->required();

    auto* c_canonical =
        common(app.add_subcommand("canonical", "canonical equation of the class"));
    c_canonical->add_option("gens", gens_args, "generators")->required();

    auto* c_generic =
        common(app.add_subcommand("generic", "generic form of the whole class"));
    c_generic->add_option("gens", gens_args, "generators")->required();
    c_generic->add_option("--xdeg-bound", xdeg_bound, "list E-set monomials up to this x-degree");

    auto* c_sample = common(app.add_subcommand("sample", "random member of the class"));
    c_sample->add_option("gens", gens_args, "generators")->required();
    c_sample->add_option("--seed", seed, "random seed (default 0)");
    c_sample->add_option("--terms", terms, "number of extra free monomials");
    c_sample->add_option("--coeff-bound", coeff_bound, "coefficient magnitude bound");

    auto* c_enumerate =
        common(app.add_subcommand("enumerate", "all classes with a given Milnor number"));
    c_enumerate->add_option("milnor", m_arg, "target Milnor number")->required();
    c_enumerate->add_flag("--with-canonical", with_canonical,
                          "also build each canonical equation");

    auto* c_irreducible =
        common(app.add_subcommand("irreducible", "Abhyankar irreducibility test"));
    c_irreducible->add_option("poly", poly_arg, "expression, file.poly, or -")->required();

    auto* c_semigroup =
        common(app.add_subcommand("semigroup-of", "semigroup of an irreducible polynomial"));
    c_semigroup->add_option("poly", poly_arg, "expression, file.poly, or -")->required();

    auto* c_milnor = common(app.add_subcommand("milnor", "Milnor number via resultants"));
    c_milnor->add_option("poly", poly_arg, "expression, file.poly, or -")->required();

    auto* c_intersect =
        common(app.add_subcommand("intersect", "intersection multiplicity of two curves"));
    c_intersect->add_option("poly1", poly_arg, "first polynomial")->required();
    c_intersect->add_option("poly2", poly_arg2, "second polynomial")->required();

    auto* c_puiseux =
        common(app.add_subcommand("puiseux", "Newton-Puiseux pairs of a semigroup"));
    c_puiseux->add_option("gens", gens_args, "generators")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (json_mode) out << json{{"error", e.what()}}.dump() << '\n';
        return 2;
    }

    const Emitter em{json_mode, out, err};
    try {
        if (c_validate->parsed()) return cmd_validate(em, parse_generators(gens_args));
        if (c_canonical->parsed()) return cmd_canonical(em, parse_generators(gens_args));
        if (c_generic->parsed())
            return cmd_generic(em, parse_generators(gens_args), xdeg_bound);
        if (c_sample->parsed())
            return cmd_sample(em, parse_generators(gens_args), seed, terms, coeff_bound);
        if (c_enumerate->parsed()) return cmd_enumerate(em, Int(m_arg), with_canonical);
        if (c_irreducible->parsed()) return cmd_irreducible(em, load_poly(poly_arg));
        if (c_semigroup->parsed()) return cmd_semigroup_of(em, load_poly(poly_arg));
        if (c_milnor->parsed()) return cmd_milnor(em, load_poly(poly_arg));
        if (c_intersect->parsed())
            return cmd_intersect(em, load_poly(poly_arg), load_poly(poly_arg2));
        if (c_puiseux->parsed()) return cmd_puiseux(em, parse_generators(gens_args));
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        return em.error(2, e.what());
    } catch (const std::domain_error& e) {
        return em.error(1, e.what());
    } catch (const std::invalid_argument& e) {
        return em.error(2, e.what());
    } catch (const std::exception& e) {
        return em.error(2, std::string("internal error: ") + e.what());
    }
}

}  // namespace equising::cli
