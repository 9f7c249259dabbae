// Command-line front end. JSON results are wrapped as {"config": ..., "result": ...};
// CSV results start with a "# config" comment line.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "thetacodes/examples.hpp"
#include "thetacodes/json_io.hpp"
#include "thetacodes/parallel.hpp"
#include "thetacodes/theta.hpp"

using namespace thetacodes;

namespace {

struct Common {
    int p = 2;
    std::int64_t ell = 7;
    std::string prec = std::to_string(kDefaultPrecision);
};

void add_common(CLI::App* cmd, Common& c, bool with_ell = true) {
    cmd->add_option("--p", c.p, "prime")->required();
    if (with_ell) cmd->add_option("--ell", c.ell, "level, square-free and 3 mod 4")->required();
    cmd->add_option("--prec", c.prec, "exponent bound, integer or a/b")->capture_default_str();
}

enum class Format { Auto, Json, Csv, Pretty };

Format g_format = Format::Auto;

std::string config_line(const Json& config) {
    std::string out = "# config:";
    for (const auto& [k, v] : config.items()) out += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    return out;
}

// JSON by default; --format pretty prints the config line and the text form.
void emit(const Json& config, const Json& result, const std::string& pretty) {
    if (g_format == Format::Csv) throw Error(Errc::ParseError, "csv output is only available for tables");
    if (g_format == Format::Pretty)
        std::cout << config_line(config) << "\n" << pretty;
    else
        std::cout << Json{{"config", config}, {"result", result}}.dump(2) << "\n";
}

// Tables are CSV by default; --format json wraps the rows.
void emit_table(const Json& config, const std::string& csv) {
    if (g_format == Format::Json) {
        Json rows = Json::array();
        std::stringstream ss(csv);
        std::string line;
        while (std::getline(ss, line)) rows.push_back(line);
        std::cout << Json{{"config", config}, {"result", {{"csv", rows}}}}.dump(2) << "\n";
        return;
    }
    std::cout << config_line(config) << "\n" << csv;
}

std::string pretty_collisions(const CollisionReport& r) {
    std::ostringstream os;
    os << r.code_count << " codes, " << r.swe_count << " swe, " << r.theta_count << " theta series\n";
    for (const auto& c : r.classes) {
        os << "class " << c.series.str() << "\n";
        for (std::size_t i = 0; i < c.swes.size(); ++i) {
            const Generators& g = c.representatives[i];
            os << "  " << format_swe(c.swes[i], r.spec.p) << "  from a1=" << format_element(g.a1)
               << " a2=" << format_element(g.a2) << " v=" << format_word(g.v) << "\n";
        }
        for (const auto& s : c.checks) os << "  ell=" << s.level.ell << (s.separated ? " separated" : " not separated") << "\n";
    }
    return os.str();
}

Word parse_vector(const std::string& s, int p, bool printed) {
    Word w;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) w.push_back(printed ? parse_printed_element(part, p) : parse_ring_element(part, p));
    return w;
}

// --code: inline JSON, a JSON file, or "a1;a2;v1,v2,...".
Code load_code(const std::string& spec, int p, std::int64_t ell, SpanKind span, bool printed) {
    if (!spec.empty() && spec.front() == '{') return code_from_json(Json::parse(spec));
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        return code_from_json(Json::parse(in));
    }
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) parts.push_back(part);
    if (parts.size() != 3) throw Error(Errc::ParseError, "inline code must be a1;a2;v");
    const RingContext ctx = check_admissible(p, ell).ctx;
    auto el = [&](const std::string& x) { return printed ? parse_printed_element(x, p) : parse_ring_element(x, p); };
    return build_code(el(parts[0]), el(parts[1]), parse_vector(parts[2], p, printed), span, ctx);
}

template <typename T>
std::vector<T> parse_list(const std::string& s) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(static_cast<T>(std::stoll(part)));
    return out;
}

int exit_code(Errc e) {
    switch (e) {
        case Errc::NotSquareFree:
        case Errc::NotThreeMod4:
        case Errc::PDividesEll:
        case Errc::NotPrime:
        case Errc::UnknownExample:
        case Errc::ParseError:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta series of Construction-A lattices from codes over O_K/pO_K"};
    app.require_subcommand(1);
    unsigned threads = 0;
    int ceiling = kDefaultTruncationCeiling;
    app.add_option("--threads", threads, "worker threads (0: THETACODES_THREADS or all cores)");
    app.add_option("--trunc-ceiling", ceiling, "largest truncation tried by --auto")->capture_default_str();
    const std::map<std::string, Format> formats = {{"json", Format::Json}, {"csv", Format::Csv}, {"pretty", Format::Pretty}};
    app.add_option("--format", g_format, "json (default), pretty, or csv for tables")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    Common cs;
    auto* coset = app.add_subcommand("coset-theta", "theta series of the coset a - b w + p O_K");
    add_common(coset, cs);
    int a = 0, b = 0;
    std::string method = "direct";
    coset->add_option("--a", a)->required();
    coset->add_option("--b", b)->required();
    coset->add_option("--method", method)->check(CLI::IsMember({"direct", "factored"}))->capture_default_str();

    Common cc;
    auto* ctheta = app.add_subcommand("code-theta", "theta series of the Construction-A lattice of a code");
    add_common(ctheta, cc);
    std::string code_spec, span_name = "module";
    bool oracle = false, printed = false;
    ctheta->add_option("--code", code_spec, "JSON, JSON file, or a1;a2;v")->required();
    ctheta->add_option("--span", span_name)->check(CLI::IsMember({"module", "fp"}))->capture_default_str();
    ctheta->add_flag("--oracle", oracle, "also compare against direct lattice enumeration");
    ctheta->add_flag("--printed", printed, "read elements x+yw as the element with coset label (x,y)");

    Common cw;
    auto* swecmd = app.add_subcommand("swe", "symmetric weight enumerator of a code");
    add_common(swecmd, cw);
    swecmd->add_option("--code", code_spec)->required();
    swecmd->add_option("--span", span_name)->check(CLI::IsMember({"module", "fp"}))->capture_default_str();
    swecmd->add_flag("--printed", printed);

    Common cn;
    auto* nul = app.add_subcommand("nullity", "exact nullity of the monomial-theta matrix");
    add_common(nul, cn);
    int n = 1, trunc = -1;
    bool autotrunc = false;
    nul->add_option("--n", n)->required();
    auto* topt = nul->add_option("--trunc", trunc, "rows q^0..q^T");
    nul->add_flag("--auto", autotrunc, "double T until the nullity is stable (default)")->excludes(topt);

    Common ct;
    auto* table = app.add_subcommand("nullity-table", "CSV of stabilized nullities");
    add_common(table, ct, false);
    std::string ells_s, ns_s;
    table->add_option("--ells", ells_s)->required();
    table->add_option("--ns", ns_s)->required();

    Common co;
    auto* collide = app.add_subcommand("collide", "codes of the family with a shared theta series");
    add_common(collide, co);
    std::string vectors = "all";
    collide->add_option("--n", n)->required();
    collide->add_option("--span", span_name)->check(CLI::IsMember({"module", "fp"}))->capture_default_str();
    collide->add_option("--vectors", vectors)->check(CLI::IsMember({"all", "fp"}))->capture_default_str();

    Common cq;
    auto* counts = app.add_subcommand("count-table", "CSV of swe and theta counts over the family");
    add_common(counts, cq, false);
    counts->add_option("--ells", ells_s)->required();
    counts->add_option("--ns", ns_s)->required();
    counts->add_option("--span", span_name)->check(CLI::IsMember({"module", "fp"}))->capture_default_str();
    counts->add_option("--vectors", vectors)->check(CLI::IsMember({"all", "fp"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify", "rebuild and check registered examples");
    std::string example;
    bool all = false, verbose = false;
    auto* eopt = verify->add_option("--example", example);
    verify->add_flag("--all", all)->excludes(eopt);
    verify->add_flag("--verbose", verbose, "list every check, not only failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (verify->parsed() && !all && example.empty()) {
        std::cerr << "verify needs --example NAME or --all\n";
        return 2;
    }

    try {
        set_thread_count(threads);
        // Thread count is kept out of the echoed config so stdout does not depend on it.
        std::cerr << "threads: " << thread_count() << "\n";

        if (coset->parsed()) {
            const Rational prec = Rational::parse(cs.prec);
            const Admissible adm = check_admissible(cs.p, cs.ell);
            const QSeries s = method == "direct" ? coset_theta_direct(adm.level, cs.p, {a, b}, prec)
                                                 : coset_theta_factored(adm.level, cs.p, {a, b}, prec);
            emit({{"command", "coset-theta"}, {"p", cs.p}, {"ell", cs.ell}, {"a", a}, {"b", b}, {"method", method},
                  {"precision", prec.str()}},
                 to_json(s), s.str() + "\n");
            return 0;
        }
        if (ctheta->parsed() || swecmd->parsed()) {
            const Common& c = ctheta->parsed() ? cc : cw;
            const Rational prec = Rational::parse(c.prec);
            const Admissible adm = check_admissible(c.p, c.ell);
            const Code code = load_code(code_spec, c.p, c.ell, parse_span_kind(span_name), printed);
            if (!(code.ctx == adm.ctx)) throw Error(Errc::ContextMismatch, "code ring differs from the level's ring");
            Json config{{"command", ctheta->parsed() ? "code-theta" : "swe"}, {"p", c.p},      {"ell", c.ell},
                        {"code", code_spec},   {"span", span_name},       {"printed", printed}};
            if (swecmd->parsed()) {
                const WeightEnumerator w = swe(code);
                emit(config,
                     {{"size", code.size()}, {"pretty", format_swe(w, c.p)}, {"enumerator", to_json(w)},
                      {"code", to_json(code)}},
                     std::to_string(code.size()) + " words\n" + format_swe(w, c.p) + "\n");
                return 0;
            }
            config["precision"] = prec.str();
            config["oracle"] = oracle;
            const QSeries s = code_theta(adm.level, code, prec);
            Json result{{"series", to_json(s)}};
            std::string text = s.str() + "\n";
            int rc = 0;
            if (oracle) {
                const QSeries o = code_theta_oracle(adm.level, code, prec);
                const bool agrees = qs_equal_to(s, o, prec);
                result["oracle"] = {{"series", to_json(o)}, {"agrees", agrees}};
                text += std::string("oracle ") + (agrees ? "agrees" : "DISAGREES: " + o.str()) + "\n";
                rc = agrees ? 0 : 1;
            }
            emit(config, result, text);
            return rc;
        }
        if (nul->parsed()) {
            const Admissible adm = check_form_level(cn.p, cn.ell);
            KernelReport r = trunc >= 0 ? exact_nullity(build_matrix(cn.p, adm.level, n, trunc))
                                        : stabilized_nullity(cn.p, adm.level, n, ceiling);
            Json config{{"command", "nullity"}, {"p", cn.p}, {"ell", cn.ell}, {"n", n}};
            if (trunc >= 0)
                config["trunc"] = trunc;
            else
                config["trunc_ceiling"] = ceiling;
            std::ostringstream text;
            text << "rank " << r.rank << ", nullity " << r.nullity << " (" << r.rows << " x " << r.cols
                 << ", truncation " << r.truncation << ", " << r.method << ")\n";
            for (std::size_t i = 0; i < r.kernel_basis.size(); ++i) {
                const auto [lhs, rhs] = kernel_to_relation(r, i);
                text << format_swe(lhs, cn.p) << " = " << format_swe(rhs, cn.p) << "\n";
            }
            emit(config, to_json(r), text.str());
            return 0;
        }
        if (table->parsed()) {
            const auto ells = parse_list<std::int64_t>(ells_s);
            const auto ns = parse_list<int>(ns_s);
            std::vector<std::vector<int>> grid(ns.size(), std::vector<int>(ells.size()));
            for (std::size_t i = 0; i < ns.size(); ++i)
                for (std::size_t j = 0; j < ells.size(); ++j)
                    grid[i][j] = stabilized_nullity(ct.p, check_form_level(ct.p, ells[j]).level, ns[i], ceiling).nullity;
            emit_table({{"command", "nullity-table"}, {"p", ct.p}, {"ells", ells_s}, {"ns", ns_s}, {"trunc_ceiling", ceiling}},
                       nullity_table_csv(ells, ns, grid));
            return 0;
        }
        if (collide->parsed()) {
            SearchSpec spec{co.p, check_admissible(co.p, co.ell).level, n, parse_span_kind(span_name),
                            parse_vector_domain(vectors), Rational::parse(co.prec)};
            const CollisionReport r = find_collisions(spec);
            emit({{"command", "collide"}, {"p", co.p}, {"ell", co.ell}, {"n", n}, {"span", span_name},
                  {"vectors", vectors}, {"precision", spec.precision.str()}},
                 to_json(r), pretty_collisions(r));
            return 0;
        }
        if (counts->parsed()) {
            const auto cells = count_table(cq.p, parse_span_kind(span_name), parse_vector_domain(vectors),
                                           parse_list<std::int64_t>(ells_s), parse_list<int>(ns_s),
                                           Rational::parse(cq.prec));
            emit_table({{"command", "count-table"}, {"p", cq.p}, {"span", span_name}, {"vectors", vectors},
                        {"ells", ells_s}, {"ns", ns_s}, {"precision", cq.prec}},
                       count_table_csv(cells));
            return 0;
        }
        if (verify->parsed()) {
            std::vector<std::string> names;
            if (all)
                for (const auto& ex : example_registry()) names.push_back(ex.name);
            else
                names.push_back(example);
            std::cout << "# config: command=verify " << (all ? "all" : "example=" + example) << "\n";
            bool ok = true;
            for (const auto& name : names) {
                const ExampleReport r = verify_example(name);
                ok = ok && r.passed();
                std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
                for (const auto& c : r.checks)
                    if (verbose || !c.ok) std::cout << "  " << (c.ok ? "ok   " : "FAIL ") << c.what << (c.ok ? "" : ": " + c.detail) << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
