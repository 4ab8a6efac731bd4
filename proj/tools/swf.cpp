#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "swf/report.hpp"

using namespace swf;
using nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitVerdict = 4;

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

StableClass load(const std::string& path)
{
    auto sc = read_complex_file(path);
    require_valid(sc.complex);
    return sc;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

std::uint64_t fuzz_seed(std::uint64_t seed, std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

int verdict_exit(const std::vector<Verdict>& vs) { return all_pass(vs) ? 0 : kExitVerdict; }

int cmd_validate(const std::string& path)
{
    const auto sc = read_complex_file(path);
    const auto problems = validate(sc.complex);
    if (!problems.empty()) {
        for (const auto& p : problems)
            fmt::print(stderr, "{}: {}\n", path, p);
        return kExitInvalid;
    }
    fmt::print("{}: valid; {} at level {}, {} free generators, top cell in degree {}\n", path, sc.complex.name,
               sc.complex.level, sc.complex.generators.size(), sc.complex.top_cell_degree());
    return 0;
}

int cmd_borel(const std::string& path, const std::string& group, int max_degree, const std::string& out,
              bool homology, bool json)
{
    const auto k = parse_group(group);
    if (!k)
        throw CliError(1, fmt::format("unknown group '{}'", group));
    const auto sc = load(path);
    const int md = max_degree < 0 ? default_max_degree(sc.complex) : max_degree;
    const BorelComputation comp(sc.complex, *k, md);
    auto m = homology ? comp.homology() : comp.cohomology();
    m.grading_offset = Rational(-sc.grading_shift());
    const auto doc = module_json(m);
    if (!out.empty())
        write_file(out, doc.dump(2) + "\n");
    if (json)
        fmt::print("{}\n", doc.dump(2));
    else
        fmt::print("{}", module_text(sc.complex.name, m));
    return 0;
}

int cmd_invariants(const std::string& path, std::optional<std::int64_t> m, const std::string& n, int max_degree,
                   bool json)
{
    auto sc = load(path);
    if (m)
        sc.m = *m;
    if (!n.empty()) {
        try {
            sc.n = parse_rational(n);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    try {
        sc = desuspend(sc.complex, sc.m, sc.n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const auto r = manolescu_invariants(sc, max_degree < 0 ? default_max_degree(sc.complex) : max_degree);
    if (json)
        fmt::print("{}\n", invariants_json(r).dump(2));
    else
        fmt::print("{}", invariants_text(r));
    return 0;
}

struct CorpusResult {
    const CorpusEntry* entry;
    Analysis analysis;
    std::vector<Verdict> verdicts;
};

std::vector<CorpusResult> run_corpus(int max_degree, unsigned threads, const std::string& theorems)
{
    const auto& corpus = builtin_corpus();
    std::vector<CorpusResult> results(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        auto a = analyze(corpus[i].sc, max_degree);
        auto vs = a.verdicts;
        for (auto& v : check_expectations(corpus[i], a))
            vs.push_back(std::move(v));
        a.verdicts = vs;
        results[i] = {&corpus[i], std::move(a), {}};
    });
    for (auto& r : results)
        r.verdicts = select_verdicts(r.analysis.verdicts, theorems);
    return results;
}

int cmd_check(const std::string& path, bool corpus, const std::string& theorems, int max_degree, unsigned threads,
              bool json)
{
    if (corpus == !path.empty())
        throw CliError(1, "give exactly one of FILE or --corpus");
    std::vector<std::pair<std::string, std::vector<Verdict>>> groups;
    if (corpus) {
        for (auto& r : run_corpus(max_degree, threads, theorems))
            groups.emplace_back(r.entry->name, std::move(r.verdicts));
    } else {
        const auto a = analyze(load(path), max_degree);
        groups.emplace_back(a.sc.complex.name, select_verdicts(a.verdicts, theorems));
    }
    std::vector<Verdict> all;
    ordered_json doc = ordered_json::object();
    for (const auto& [name, vs] : groups) {
        ordered_json arr = ordered_json::array();
        for (const auto& v : vs)
            arr.push_back(verdict_json(v));
        doc[name] = std::move(arr);
        if (!json)
            fmt::print("{}\n{}", name, verdicts_text(vs));
        all.insert(all.end(), vs.begin(), vs.end());
    }
    if (json)
        fmt::print("{}\n", doc.dump(2));
    else
        fmt::print("{} of {} checks pass\n", std::count_if(all.begin(), all.end(), [](const Verdict& v) { return v.pass; }),
                   all.size());
    return verdict_exit(all);
}

int cmd_fuzz(std::uint64_t seed, int count, int max_gens, int max_degree, int max_level, unsigned threads, bool json)
{
    if (count < 0 || max_gens < 0 || max_degree < 0 || max_level < 0)
        throw CliError(1, "fuzz parameters must be nonnegative");
    std::vector<std::vector<Verdict>> failures(static_cast<std::size_t>(count));
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
    parallel_for(seeds.size(), threads, [&](std::size_t i) {
        seeds[i] = fuzz_seed(seed, i);
        const auto c = random_complex(seeds[i], max_gens, max_degree, max_level);
        for (auto& v : analyze({c, 0, Rational(0)}).verdicts)
            if (!v.pass)
                failures[i].push_back(std::move(v));
    });
    int passed = 0;
    ordered_json failed = ordered_json::array();
    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (failures[i].empty()) {
            ++passed;
            continue;
        }
        ordered_json f;
        f["index"] = i;
        f["seed"] = seeds[i];
        for (const auto& v : failures[i])
            f["verdicts"].push_back(verdict_json(v));
        failed.push_back(std::move(f));
        if (!json)
            fmt::print("complex {} (seed {}):\n{}", i, seeds[i], verdicts_text(failures[i]));
    }
    if (json) {
        ordered_json doc;
        doc["seed"] = seed;
        doc["count"] = count;
        doc["passed"] = passed;
        doc["failures"] = std::move(failed);
        fmt::print("{}\n", doc.dump(2));
    } else {
        fmt::print("seed {}: {}/{} complexes pass\n", seed, passed, count);
    }
    return passed == count ? 0 : kExitVerdict;
}

int cmd_corpus_list()
{
    for (const auto& e : builtin_corpus())
        fmt::print("{:<8} level {}  {} free generators  top cell {}\n", e.name, e.sc.complex.level,
                   e.sc.complex.generators.size(), e.sc.complex.top_cell_degree());
    return 0;
}

int cmd_corpus_run(int max_degree, const std::string& out_dir, unsigned threads, bool json)
{
    const auto results = run_corpus(max_degree, threads, "all");
    std::vector<Verdict> all;
    ordered_json doc = ordered_json::array();
    for (const auto& r : results) {
        doc.push_back(report_json(r.analysis));
        all.insert(all.end(), r.verdicts.begin(), r.verdicts.end());
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& r : results)
            write_file((std::filesystem::path(out_dir) / (r.entry->name + ".report.json")).string(),
                       report_json(r.analysis).dump(2) + "\n");
    }
    if (json) {
        fmt::print("{}\n", doc.dump(2));
    } else {
        fmt::print("{:<8} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}  {}\n", "complex", "alpha", "beta", "gamma", "delta",
                   "d_bar", "d_und", "checks");
        for (const auto& r : results) {
            const auto& inv = r.analysis.invariants;
            const auto ok = std::count_if(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return v.pass; });
            fmt::print("{:<8} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}  {}/{}\n", r.entry->name, format_rational(inv.alpha),
                       format_rational(inv.beta), format_rational(inv.gamma), format_rational(inv.delta),
                       format_rational(inv.delta_bar), format_rational(inv.delta_under), ok, r.verdicts.size());
            for (const auto& v : r.verdicts)
                if (!v.pass)
                    fmt::print("  FAIL {}: {}\n", v.name, v.detail);
        }
    }
    return verdict_exit(all);
}

int cmd_corpus_export(const std::string& dir)
{
    std::filesystem::create_directories(dir);
    for (const auto& e : builtin_corpus()) {
        const auto path = (std::filesystem::path(dir) / (e.name + ".json")).string();
        write_file(path, serialize_complex(e.sc));
        fmt::print("wrote {}\n", path);
    }
    return 0;
}

int cmd_resolution_dump(int length)
{
    const auto r = build_resolution(length);
    for (int g = 0; g < r->generator_count(); ++g) {
        std::string d;
        for (const auto& [h, mask] : r->generators()[g].boundary)
            d += fmt::format("{}({}) y{}", d.empty() ? "" : " + ", AlgebraElement::from_mask(mask).to_string(), h);
        fmt::print("y{:<3} degree {:>3}  D = {}\n", g, r->generator_degree(g), d.empty() ? "0" : d);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Borel cohomology and correction terms of Pin(2)-complexes of type SWF"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file, group, out, theorems = "all", n_text;
    int max_degree = -1;
    unsigned threads = 0;
    bool json = false, homology = false, corpus = false;
    std::optional<std::int64_t> m;

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a complex file");
    validate_cmd->add_option("FILE", file)->required();
    validate_cmd->callback([&] { action = [&] { return cmd_validate(file); }; });

    auto* borel_cmd = app.add_subcommand("borel", "Borel cohomology of a complex for one group");
    borel_cmd->add_option("FILE", file)->required();
    borel_cmd->add_option("--group", group, "z2, z4, s1 or pin2")->required();
    borel_cmd->add_option("--max-degree", max_degree, "Top degree of the window");
    borel_cmd->add_option("--out", out, "Write the module as JSON to this file");
    borel_cmd->add_flag("--homology", homology, "Report homology instead of cohomology");
    borel_cmd->add_flag("--json", json, "Print JSON instead of a table");
    borel_cmd->callback([&] { action = [&] { return cmd_borel(file, group, max_degree, out, homology, json); }; });

    auto* inv_cmd = app.add_subcommand("invariants", "Correction terms of a stable class");
    inv_cmd->add_option("FILE", file)->required();
    inv_cmd->add_option("--m", m, "Number of R~ desuspensions (overrides the file)");
    inv_cmd->add_option("--n", n_text, "Number of H desuspensions as p/q (overrides the file)");
    inv_cmd->add_option("--max-degree", max_degree, "Top degree of the window");
    inv_cmd->add_flag("--json", json, "Print JSON instead of a table");
    inv_cmd->callback([&] { action = [&] { return cmd_invariants(file, m, n_text, max_degree, json); }; });

    auto* check_cmd = app.add_subcommand("check", "Run the property checks on a file or the corpus");
    check_cmd->add_option("FILE", file);
    check_cmd->add_flag("--corpus", corpus, "Check every built-in corpus entry");
    check_cmd->add_option("--theorems", theorems, "all, or a comma list of families and check names");
    check_cmd->add_option("--max-degree", max_degree, "Top degree of the window");
    check_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    check_cmd->add_flag("--json", json, "Print JSON");
    check_cmd->callback(
        [&] { action = [&] { return cmd_check(file, corpus, theorems, max_degree, threads, json); }; });

    std::uint64_t seed = 0;
    int count = 100, max_gens = 6, fuzz_degree = 8, max_level = 2;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run all checks on seeded random complexes");
    fuzz_cmd->add_option("--seed", seed)->required();
    fuzz_cmd->add_option("--count", count)->required();
    fuzz_cmd->add_option("--max-gens", max_gens, "Most free generators per complex");
    fuzz_cmd->add_option("--max-degree", fuzz_degree, "Highest generator degree");
    fuzz_cmd->add_option("--max-level", max_level, "Highest level of the fixed sphere");
    fuzz_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    fuzz_cmd->add_flag("--json", json, "Print JSON");
    fuzz_cmd->callback([&] {
        action = [&] { return cmd_fuzz(seed, count, max_gens, fuzz_degree, max_level, threads, json); };
    });

    auto* corpus_cmd = app.add_subcommand("corpus", "Built-in corpus");
    corpus_cmd->require_subcommand(1);
    auto* list_cmd = corpus_cmd->add_subcommand("list", "List corpus entries");
    list_cmd->callback([&] { action = [&] { return cmd_corpus_list(); }; });
    auto* run_cmd = corpus_cmd->add_subcommand("run", "Analyze every corpus entry");
    run_cmd->add_option("--max-degree", max_degree, "Top degree of the window");
    run_cmd->add_option("--out", out, "Directory for per-entry JSON reports");
    run_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    run_cmd->add_flag("--json", json, "Print JSON");
    run_cmd->callback([&] { action = [&] { return cmd_corpus_run(max_degree, out, threads, json); }; });
    auto* export_cmd = corpus_cmd->add_subcommand("export", "Write corpus complexes as files");
    export_cmd->add_option("DIR", out)->required();
    export_cmd->callback([&] { action = [&] { return cmd_corpus_export(out); }; });

    int length = 24;
    auto* res_cmd = app.add_subcommand("resolution", "Free resolution model");
    res_cmd->require_subcommand(1);
    auto* dump_cmd = res_cmd->add_subcommand("dump", "Print generators and differentials");
    dump_cmd->add_option("--length", length, "Top degree");
    dump_cmd->callback([&] { action = [&] { return cmd_resolution_dump(length); }; });

    CLI11_PARSE(app, argc, argv);

    try {
        return action();
    } catch (const ParseError& e) {
        fmt::print(stderr, "parse error: {}\n", e.what());
        return kExitParse;
    } catch (const ValidationError& e) {
        for (const auto& v : e.violations())
            fmt::print(stderr, "invalid: {}\n", v);
        return kExitInvalid;
    } catch (const CliError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return e.code;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}
