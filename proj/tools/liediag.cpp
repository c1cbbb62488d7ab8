// liediag: build, transform and export representation diagrams; compute and
// enumerate orbit normal forms; cross-check the family classifications.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "liediag/error.hpp"
#include "liediag/families.hpp"
#include "liediag/io.hpp"
#include "liediag/lambda_ops.hpp"

using namespace liediag;

namespace {

constexpr int kMismatch = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SourceOptions {
    std::string source;
    bool adjoint = false;
    bool coadjoint = false;
    std::vector<Index> order;  // 1-based on the command line

    void add(CLI::App* app)
    {
        app->add_option("source", source, "Family selector (heisenberg, sl2, upper:N, witt:M:N, tensor:L:U:M:N) or diagram JSON file")
            ->required();
        auto* a = app->add_flag("--adjoint", adjoint, "Use the adjoint module");
        auto* c = app->add_flag("--coadjoint", coadjoint, "Use the coadjoint module");
        a->excludes(c);
        app->add_option("--order", order, "Vertex ordering override: 1-based permutation, comma separated")
            ->delimiter(',');
    }

    Diagram load() const
    {
        const bool is_file = source.ends_with(".json") || std::filesystem::is_regular_file(source);
        Diagram d = [&] {
            if (is_file) {
                if (adjoint || coadjoint) throw ParseError("--adjoint/--coadjoint apply to family selectors only", 0);
                return import_json(read_file(source));
            }
            const auto variant =
                adjoint ? FamilyVariant::Adjoint : (coadjoint ? FamilyVariant::Coadjoint : FamilyVariant::Default);
            return select_family(source, variant).diagram();
        }();
        if (!order.empty()) {
            std::vector<Index> zero_based;
            for (Index p : order) zero_based.push_back(p - 1);
            d = permute_vertices(d, zero_based);
        }
        return d;
    }
};

// ----------------------------------------------------------------- diagram

int run_diagram(CLI::App* app, const SourceOptions& src, const std::string& out, std::optional<long> char_p,
                const std::vector<std::string>& sum_files, const std::vector<std::string>& product_files,
                const std::vector<int>& sym, const std::vector<int>& ext, const std::vector<int>& symsub)
{
    Diagram d = src.load();
    std::size_t sum_i = 0, product_i = 0, sym_i = 0, ext_i = 0, symsub_i = 0;
    for (const CLI::Option* opt : app->parse_order()) {
        const std::string name = opt->get_name();
        if (name == "--dual")
            d = dual_diagram(d);
        else if (name == "--sum")
            d = disjoint_union(d, import_json(read_file(sum_files.at(sum_i++))));
        else if (name == "--product")
            d = product(d, import_json(read_file(product_files.at(product_i++))));
        else if (name == "--sym")
            d = sym_power(d, sym.at(sym_i++), char_p);
        else if (name == "--ext")
            d = ext_power(d, ext.at(ext_i++), char_p);
        else if (name == "--symsub")
            d = sym_sub(d, symsub.at(symsub_i++), char_p);
    }
    if (char_p && sym.empty() && ext.empty() && symsub.empty()) {
        // Deletion on the diagram itself.
        std::vector<Diagram::Edge> doomed;
        for (const auto& [e, label] : d.edges())
            if (label.vanishes_mod(*char_p)) doomed.push_back(e);
        for (const auto& e : doomed) d.set_edge(e.first, e.second, LinForm(d.algebra().dim()));
    }
    std::cout << (out == "json" ? export_json(d) : export_dot(d));
    return 0;
}

// ---------------------------------------------------------------------- nf

RatVector load_vector(const std::string& spec, Index size)
{
    if (spec.empty()) throw ParseError("--vector is required", 0);
    const RatVector v = parse_vector(spec.front() == '@' ? read_file(spec.substr(1)) : spec);
    if (v.size() != size)
        throw ParseError("vector has " + std::to_string(v.size()) + " entries, diagram has " + std::to_string(size) +
                             " vertices",
                         0);
    return v;
}

std::string vector_text(const RatVector& v)
{
    std::string out = "[";
    for (Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v(i).str();
    return out + "]";
}

void print_pattern(const Pattern& p, const Diagram& d)
{
    std::cout << "free: " << pattern_summary(p, d) << "\n";
    for (const auto& m : p.memorized)
        std::cout << "  memorized at " << m.position + 1 << " (" << d.vertices()[m.position].label
                  << "): " << m.form.str(d.algebra().dual_labels()) << "\n";
    for (const auto& c : p.conditions) std::cout << "  assuming " << c.str() << " != 0\n";
    for (const auto& e : p.equalities) std::cout << "  assuming " << e.str() << " = 0\n";
}

int run_nf(const std::string& sub, const SourceOptions& src, const std::string& vector_spec, bool stratify, bool json,
           const std::string& scope_name)
{
    const Diagram d = src.load();
    require_strictly_triangular(d);
    if (sub == "check") {
        const RatVector x = load_vector(vector_spec, d.size());
        const auto scope = scope_name == "zero" ? SpanScope::ZeroPositions : SpanScope::AllEarlier;
        const NormalFormCheck c = is_normal_form(d, x, scope);
        if (json) {
            Json j = {{"normal_form", c.ok}};
            if (c.failing) j["failing_position"] = *c.failing + 1;
            std::cout << j.dump(2) << "\n";
        } else if (c.ok) {
            std::cout << "true\n";
        } else {
            std::cout << "false (position " << *c.failing + 1 << ", " << d.vertices()[*c.failing].label << ")\n";
        }
        return 0;
    }
    if (sub == "reduce") {
        const RatVector x = load_vector(vector_spec, d.size());
        const Reduction r = reduce(d, x);
        if (json) {
            std::cout << Json{{"normal_form", vector_to_json(r.normal_form)}, {"transcript", transcript_to_json(r.transcript)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "normal form: " << vector_text(r.normal_form) << "\n";
            for (const auto& s : r.transcript) std::cout << "  exp(" << s.t.str() << " * T(" << vector_text(s.l) << "))\n";
        }
        return 0;
    }
    if (sub == "generic") {
        const Pattern p = general_position(d);
        if (json)
            std::cout << pattern_to_json(p, d).dump(2) << "\n";
        else
            print_pattern(p, d);
        return 0;
    }
    if (sub == "enumerate") {
        const auto patterns = enumerate_normal_forms(d, {stratify});
        if (json) {
            Json out = Json::array();
            for (const auto& p : patterns) out.push_back(pattern_to_json(p, d));
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << patterns.size() << " patterns\n";
            for (const auto& p : patterns) print_pattern(p, d);
        }
        return 0;
    }
    throw ParseError("unknown nf subcommand '" + sub + "' (check, reduce, generic, enumerate)", 0);
}

// ------------------------------------------------------------------ verify

struct CaseResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<std::vector<bool>> zero_patterns(const std::vector<Pattern>& ps)
{
    std::vector<std::vector<bool>> out;
    for (const auto& p : ps) out.push_back(p.free_positions());
    return out;
}

CaseResult compare(std::string name, const std::vector<Pattern>& got, const std::vector<Pattern>& want)
{
    CaseResult r{std::move(name), zero_patterns(got) == zero_patterns(want), ""};
    r.detail = std::to_string(got.size()) + " enumerated, " + std::to_string(want.size()) + " predicted";
    return r;
}

unsigned thread_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LIEDIAG_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& cases)
{
    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(thread_count(), cases.size()); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < cases.size();) {
                try {
                    results[i] = cases[i]();
                } catch (const std::exception& e) {
                    results[i] = {"case " + std::to_string(i), false, e.what()};
                }
            }
        });
    for (auto& t : pool) t.join();
    return results;
}

std::pair<int, int> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad range '" + s + "' (expected A..B or A)", 0);
    }
}

int report(const std::vector<CaseResult>& results)
{
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (!r.ok) ++failed;
    }
    std::cout << results.size() - failed << "/" << results.size() << " cases passed\n";
    return failed ? kMismatch : 0;
}

int verify_witt(const std::string& m_range, int n_max)
{
    const auto [m_lo, m_hi] = parse_range(m_range);
    if (m_lo < 0 || m_hi < m_lo) throw ParseError("bad --m range", 0);
    std::vector<std::function<CaseResult()>> cases;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = m + 1; n <= n_max; ++n)
            cases.push_back([m, n] {
                const Diagram d = witt_coadjoint(m, n).diagram();
                return compare("witt:" + std::to_string(m) + ":" + std::to_string(n), enumerate_normal_forms(d),
                               predicted_witt_patterns(m, n));
            });
    return report(run_cases(cases));
}

int verify_tensor(const std::string& grid)
{
    if (grid != "default") throw ParseError("unknown grid '" + grid + "' (only 'default')", 0);
    std::vector<std::function<CaseResult()>> cases;
    const std::vector<Rational> lambdas{Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    std::vector<Rational> mus{Rational(1, 3), Rational(3, 2), Rational(5, 2)};
    for (int mu = -2; mu <= 4; ++mu) mus.emplace_back(mu);
    for (const auto& lambda : lambdas)
        for (const auto& mu : mus)
            for (int m = 0; m <= 1; ++m)
                for (int n = 1; n <= 8; ++n)
                    cases.push_back([lambda, mu, m, n] {
                        const Diagram d = tensor_field(lambda, mu, m, n).diagram();
                        return compare("tensor:" + lambda.str() + ":" + mu.str() + ":" + std::to_string(m) + ":" +
                                           std::to_string(n),
                                       enumerate_normal_forms(d), predicted_tensor_patterns(lambda, mu, m, n));
                    });
    return report(run_cases(cases));
}

int verify_upper(int n)
{
    const Diagram d = upper_coadjoint(n).diagram();
    const auto patterns = enumerate_normal_forms(d);
    const bool conditions = std::any_of(patterns.begin(), patterns.end(),
                                        [](const Pattern& p) { return !p.conditions.empty(); });
    if (n == 4) {
        const auto ref = upper4_coadjoint_reference();
        std::size_t matched = 0;
        for (std::size_t i = 0; i < std::min(ref.size(), patterns.size()); ++i) {
            std::vector<Index> free;
            for (Index p : ref[i]) free.push_back(p - 1);
            if (patterns[i].free_positions() == pattern_from_free(d.size(), free).free_positions()) ++matched;
        }
        const bool ok = matched == ref.size() && patterns.size() == ref.size();
        std::cout << matched << "/" << ref.size() << " patterns matched"
                  << (patterns.size() != ref.size() ? " (" + std::to_string(patterns.size()) + " enumerated)" : "")
                  << "\n";
        return ok ? 0 : kMismatch;
    }
    std::cout << "upper:" << n << " coadjoint: " << patterns.size() << " patterns, "
              << (conditions ? "some carry polynomial conditions" : "no polynomial conditions") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Diagrams of Lie algebra representations and orbit normal forms"};
    app.require_subcommand(1);

    SourceOptions dsrc;
    std::string out = "dot";
    std::optional<long> char_p;
    std::vector<std::string> sum_files, product_files;
    std::vector<int> sym, ext, symsub;
    auto* diagram = app.add_subcommand("diagram", "Build, transform and export a diagram");
    dsrc.add(diagram);
    diagram->add_flag("--dual", "Dual diagram")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    diagram->add_option("--sum", sum_files, "Disjoint union with a diagram JSON file")->allow_extra_args(false);
    diagram->add_option("--product", product_files, "Product with a diagram JSON file")->allow_extra_args(false);
    diagram->add_option("--sym", sym, "Symmetric power S^N")->allow_extra_args(false);
    diagram->add_option("--ext", ext, "Exterior power")->allow_extra_args(false);
    diagram->add_option("--symsub", symsub, "Symmetric sub-power S_N")->allow_extra_args(false);
    diagram->add_option("--char-p", char_p, "Delete edges whose labels vanish in characteristic P");
    diagram->add_option("--out", out, "Output format")->check(CLI::IsMember({"dot", "json"}));

    SourceOptions nsrc;
    std::string nf_sub, vector_spec, scope = "all";
    bool stratify = false, json = false;
    auto* nf = app.add_subcommand("nf", "Normal forms: check, reduce, generic, enumerate");
    nf->add_option("command", nf_sub, "check | reduce | generic | enumerate")
        ->required()
        ->check(CLI::IsMember({"check", "reduce", "generic", "enumerate"}));
    nsrc.add(nf);
    nf->add_option("--vector", vector_spec, "JSON array of rationals, or @file");
    nf->add_flag("--stratify", stratify, "Branch on conditional pivots when enumerating");
    nf->add_flag("--json", json, "JSON output");
    nf->add_option("--scope", scope, "Span scope for check: all earlier positions or zero positions only")
        ->check(CLI::IsMember({"all", "zero"}));

    std::string family, m_range = "0..2", grid = "default";
    int n_max = 10, upper_n = 4;
    auto* verify = app.add_subcommand("verify", "Cross-check enumeration against the closed-form classifications");
    verify->add_option("family", family, "witt | tensor | upper")->required()->check(CLI::IsMember({"witt", "tensor", "upper"}));
    verify->add_option("--m", m_range, "Range of m for witt, e.g. 0..2");
    verify->add_option("--n-max", n_max, "Largest n for witt");
    verify->add_option("--grid", grid, "Parameter grid for tensor");
    verify->add_option("--n", upper_n, "Matrix size for upper");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*diagram) {
            if (char_p && *char_p < 2) throw ParseError("--char-p expects a prime", 0);
            return run_diagram(diagram, dsrc, out, char_p, sum_files, product_files, sym, ext, symsub);
        }
        if (*nf) return run_nf(nf_sub, nsrc, vector_spec, stratify, json, scope);
        if (*verify) {
            if (family == "witt") return verify_witt(m_range, n_max);
            if (family == "tensor") return verify_tensor(grid);
            return verify_upper(upper_n);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return 0;
}
