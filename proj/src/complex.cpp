#include "swf/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "swf/gf2.hpp"

namespace swf {

namespace {

using ordered_json = nlohmann::ordered_json;

void toggle(std::vector<int>& cells, int c)
{
    auto it = std::find(cells.begin(), cells.end(), c);
    if (it == cells.end())
        cells.push_back(c);
    else
        cells.erase(it);
}

// Collects terms keyed by target, summing coefficients.
class TermAccumulator {
public:
    void add(const AlgebraElement& coef, Target target)
    {
        for (auto& t : terms_) {
            if (t.target == target) {
                t.coef += coef;
                return;
            }
        }
        terms_.push_back({coef, target});
    }

    std::vector<Term> take()
    {
        std::vector<Term> out;
        for (auto& t : terms_)
            if (!t.coef.is_zero())
                out.push_back(t);
        return out;
    }

private:
    std::vector<Term> terms_;
};

int target_degree(const SwfComplex& c, const Target& t)
{
    return t.kind == Target::Kind::Free ? c.generators[t.index].degree : t.index;
}

std::string target_name(const SwfComplex& c, const Target& t)
{
    if (t.kind == Target::Kind::Fixed)
        return fmt::format("FIXED:c{}", t.index);
    return c.generators[t.index].name;
}

}  // namespace

int SwfComplex::generator_index(std::string_view gen) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == gen)
            return static_cast<int>(i);
    return -1;
}

int SwfComplex::top_free_degree() const
{
    int top = -1;
    for (const auto& g : generators)
        top = std::max(top, g.degree);
    return top;
}

int SwfComplex::top_cell_degree() const
{
    const int free_top = generators.empty() ? -1 : top_free_degree() + 1;
    return std::max(level, free_top);
}

CellModel::CellModel(const SwfComplex& c) : level_(c.level), fixed_count_(1 + 2 * c.level)
{
    degree_.push_back(0);
    for (int k = 1; k <= level_; ++k) {
        degree_.push_back(k);
        degree_.push_back(k);
    }
    for (const auto& g : c.generators) {
        gen_names_.push_back(g.name);
        for (int mono = 0; mono < 8; ++mono)
            degree_.push_back(g.degree + mono / 4);
    }
    for (int d : degree_)
        max_degree_ = std::max(max_degree_, d);

    boundary_.resize(degree_.size());
    for (int k = 1; k <= level_; ++k) {
        for (int p = 0; p < 2; ++p) {
            auto& b = boundary_[fixed_cell(k, p)];
            if (k == 1) {
                b.push_back(0);
            } else {
                b.push_back(fixed_cell(k - 1, 0));
                b.push_back(fixed_cell(k - 1, 1));
            }
        }
    }
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        const int gi = static_cast<int>(g);
        for (int mono = 0; mono < 8; ++mono) {
            std::vector<int> b;
            const auto bm = monomial_boundary(mono);
            for (int nu = 0; nu < 8; ++nu)
                if ((bm >> nu) & 1U)
                    toggle(b, free_cell(gi, nu));
            for (const auto& term : c.differential[g]) {
                for (const auto& m : term.coef.monomials()) {
                    const int p = monomial_product(mono, m.index());
                    if (p < 0)
                        continue;
                    if (term.target.kind == Target::Kind::Free) {
                        toggle(b, free_cell(term.target.index, p));
                    } else if (auto cell = act(p, fixed_cell(term.target.index, 0))) {
                        toggle(b, *cell);
                    }
                }
            }
            std::sort(b.begin(), b.end());
            boundary_[free_cell(gi, mono)] = std::move(b);
        }
    }
}

std::optional<int> CellModel::act(int mono, int cell) const
{
    if (cell < fixed_count_) {
        const auto m = Monomial::from_index(mono);
        if (m.s == 1)
            return std::nullopt;
        if (cell == 0)
            return 0;
        const int k = (cell - 1) / 2 + 1;
        const int p = (cell - 1) % 2;
        return fixed_cell(k, p + m.j);
    }
    const int gen = (cell - fixed_count_) / 8;
    const int mu = (cell - fixed_count_) % 8;
    const int p = monomial_product(mono, mu);
    if (p < 0)
        return std::nullopt;
    return free_cell(gen, p);
}

std::vector<int> CellModel::cells_of_degree(int d) const
{
    std::vector<int> out;
    for (int c = 0; c < size(); ++c)
        if (degree_[c] == d)
            out.push_back(c);
    return out;
}

std::string CellModel::cell_name(int cell) const
{
    if (cell == 0)
        return "c0";
    if (cell < fixed_count_) {
        const int k = (cell - 1) / 2 + 1;
        return (cell - 1) % 2 == 0 ? fmt::format("c{}", k) : fmt::format("j c{}", k);
    }
    const int gen = (cell - fixed_count_) / 8;
    const auto m = Monomial::from_index((cell - fixed_count_) % 8);
    const auto coef = AlgebraElement::monomial(m.s, m.j).to_string();
    return coef == "1" ? gen_names_[gen] : fmt::format("{} {}", coef, gen_names_[gen]);
}

std::string CellModel::render(const std::vector<int>& cells) const
{
    std::vector<std::string> parts;
    std::vector<std::uint8_t> masks(gen_names_.size(), 0);
    std::vector<int> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) {
        if (c < fixed_count_)
            parts.push_back(cell_name(c));
        else
            masks[(c - fixed_count_) / 8] ^= static_cast<std::uint8_t>(1U << ((c - fixed_count_) % 8));
    }
    for (std::size_t g = 0; g < masks.size(); ++g) {
        if (masks[g] == 0)
            continue;
        const auto coef = AlgebraElement::from_mask(masks[g]);
        const auto text = coef.to_string();
        if (text == "1")
            parts.push_back(gen_names_[g]);
        else if (coef.monomials().size() == 1)
            parts.push_back(fmt::format("{} {}", text, gen_names_[g]));
        else
            parts.push_back(fmt::format("({}) {}", text, gen_names_[g]));
    }
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

std::vector<std::string> validate(const SwfComplex& c)
{
    std::vector<std::string> violations;
    if (c.level < 0)
        violations.push_back(fmt::format("level {} is negative", c.level));
    if (c.differential.size() != c.generators.size())
        violations.push_back("differential table does not match the generator list");

    std::set<std::string> names;
    for (const auto& g : c.generators) {
        if (g.name.empty())
            violations.push_back("free generator with empty name");
        else if (!names.insert(g.name).second)
            violations.push_back(fmt::format("free generator {} is declared twice", g.name));
        if (g.degree < 0)
            violations.push_back(fmt::format("free generator {} has negative degree {}", g.name, g.degree));
    }
    if (!violations.empty())
        return violations;

    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        const auto& g = c.generators[i];
        for (const auto& term : c.differential[i]) {
            const auto& t = term.target;
            if (t.kind == Target::Kind::Free &&
                (t.index < 0 || t.index >= static_cast<int>(c.generators.size()))) {
                violations.push_back(fmt::format("D({}) targets a free generator that does not exist", g.name));
                continue;
            }
            if (t.kind == Target::Kind::Fixed && (t.index < 0 || t.index > c.level)) {
                violations.push_back(
                    fmt::format("D({}) targets c{}, which does not exist at level {}", g.name, t.index, c.level));
                continue;
            }
            if (term.coef.group() != GroupTag::Pin2) {
                violations.push_back(fmt::format("D({}) has a coefficient outside the pin2 algebra", g.name));
                continue;
            }
            const int td = target_degree(c, t);
            for (const auto& m : term.coef.monomials()) {
                if (m.degree() + td != g.degree - 1) {
                    violations.push_back(fmt::format(
                        "D({}) term {} * {} has degree {}, expected {}", g.name,
                        AlgebraElement::monomial(m.s, m.j).to_string(), target_name(c, t), m.degree() + td,
                        g.degree - 1));
                }
            }
        }
    }
    if (!violations.empty())
        return violations;

    const CellModel model(c);
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        std::vector<int> dd;
        for (int cell : model.boundary(model.free_cell(static_cast<int>(i), 0)))
            for (int z : model.boundary(cell))
                toggle(dd, z);
        if (!dd.empty())
            violations.push_back(
                fmt::format("D^2({}) = {} != 0", c.generators[i].name, model.render(dd)));
    }
    return violations;
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(violations.empty() ? std::string("invalid complex")
                                            : fmt::format("invalid complex: {}", violations.front())),
      violations_(std::move(violations))
{
}

void require_valid(const SwfComplex& c)
{
    auto v = validate(c);
    if (!v.empty())
        throw ValidationError(std::move(v));
}

SwfComplex sphere_complex(int level)
{
    SwfComplex c;
    c.name = level == 0 ? "S0" : fmt::format("RTILDE{}", level);
    c.level = level;
    return c;
}

SwfComplex fixed_subcomplex(const SwfComplex& c)
{
    auto f = sphere_complex(c.level);
    f.name = c.name + "^S1";
    return f;
}

SwfComplex suspend_rtilde(const SwfComplex& c)
{
    const auto pin = GroupTag::Pin2;
    const auto one = AlgebraElement::one();
    const auto j = AlgebraElement::monomial(0, 1);

    SwfComplex out;
    out.name = fmt::format("susp({})", c.name);
    out.level = c.level + 1;
    for (const auto& g : c.generators) {
        out.generators.push_back({g.name + ".0", g.degree});
        out.generators.push_back({g.name + ".1", g.degree + 1});
        out.generators.push_back({g.name + ".j1", g.degree + 1});
    }

    // Image of (positive half-line) x (a * target) in the suspension.
    auto half_line = [&](TermAccumulator& acc, const AlgebraElement& a, const Target& t) {
        if (t.kind == Target::Kind::Free) {
            const auto d = decompose_over(a, GroupTag::S1);
            acc.add(d.coefficients[0].in_group(pin), Target::free(3 * t.index + 1));
            acc.add(d.coefficients[1].in_group(pin), Target::free(3 * t.index + 2));
            return;
        }
        const CellModel fixed(sphere_complex(c.level));
        for (const auto& m : a.monomials()) {
            const auto cell = fixed.act(m.index(), fixed.fixed_cell(t.index, 0));
            if (!cell)
                continue;
            if (*cell == 0)
                acc.add(one, Target::fixed(1));
            else if ((*cell - 1) % 2 == 1)
                acc.add(one, Target::fixed((*cell - 1) / 2 + 2));
        }
    };

    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        const int base = 3 * static_cast<int>(i);
        TermAccumulator d0, d1, dj;
        for (const auto& term : c.differential[i]) {
            if (term.target.kind == Target::Kind::Free)
                d0.add(term.coef, Target::free(3 * term.target.index));
            else
                d0.add(term.coef, term.target);
        }
        d1.add(one, Target::free(base));
        dj.add(j, Target::free(base));
        for (const auto& term : c.differential[i]) {
            half_line(d1, term.coef, term.target);
            half_line(dj, j * term.coef, term.target);
        }
        out.differential.push_back(d0.take());
        out.differential.push_back(d1.take());
        out.differential.push_back(dj.take());
    }
    return out;
}

std::int64_t StableClass::grading_shift() const
{
    const Rational shift = Rational(m) + Rational(4) * n;
    if (shift.denominator() != 1)
        throw std::invalid_argument(fmt::format("n = {} must have denominator dividing 4", format_rational(n)));
    return shift.numerator();
}

Rational StableClass::mu() const
{
    return reduce_mod(Rational(complex.level, 2) - Rational(m, 2) - Rational(2) * n, 2);
}

StableClass desuspend(const SwfComplex& c, std::int64_t m, const Rational& n)
{
    StableClass sc{c, m, n};
    (void)sc.grading_shift();
    return sc;
}

SwfComplex random_complex(std::uint64_t seed, int max_gens, int max_degree, int max_level)
{
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    SwfComplex c;
    c.name = fmt::format("random-{}", seed);
    c.level = max_level > 0 ? uniform(0, max_level) : 0;
    const int count = max_gens > 0 ? uniform(0, max_gens) : 0;
    std::vector<int> degrees;
    for (int i = 0; i < count; ++i)
        degrees.push_back(uniform(0, std::max(0, max_degree)));
    std::sort(degrees.begin(), degrees.end());

    for (int i = 0; i < count; ++i) {
        const int k = degrees[i];
        const CellModel model(c);
        const auto src = model.cells_of_degree(k - 1);
        const auto dst = model.cells_of_degree(k - 2);
        std::vector<Term> terms;
        if (!src.empty()) {
            gf2::Matrix bd(dst.size(), src.size());
            for (std::size_t col = 0; col < src.size(); ++col) {
                for (int z : model.boundary(src[col])) {
                    const auto row = std::find(dst.begin(), dst.end(), z) - dst.begin();
                    bd.flip(static_cast<std::size_t>(row), col);
                }
            }
            gf2::Vector cycle(src.size());
            for (const auto& v : gf2::kernel_basis(bd))
                if (rng() & 1U)
                    cycle ^= v;
            TermAccumulator acc;
            for (auto col : cycle.support()) {
                const int cell = src[col];
                if (model.is_fixed(cell)) {
                    const int kk = cell == 0 ? 0 : (cell - 1) / 2 + 1;
                    const int p = cell == 0 ? 0 : (cell - 1) % 2;
                    acc.add(AlgebraElement::monomial(0, p), Target::fixed(kk));
                } else {
                    const int gen = (cell - model.fixed_count()) / 8;
                    const auto m = Monomial::from_index((cell - model.fixed_count()) % 8);
                    acc.add(AlgebraElement::monomial(m.s, m.j), Target::free(gen));
                }
            }
            terms = acc.take();
        }
        c.generators.push_back({fmt::format("g{}", i + 1), k});
        c.differential.push_back(std::move(terms));
    }
    return c;
}

namespace {

void require_keys(const ordered_json& obj, std::string_view where, std::initializer_list<std::string_view> allowed)
{
    if (!obj.is_object())
        throw ParseError(fmt::format("{}: expected an object", where));
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError(fmt::format("{}: unknown field \"{}\"", where, key));
    }
}

int get_int(const ordered_json& obj, const char* key, std::string_view where)
{
    if (!obj.contains(key))
        throw ParseError(fmt::format("{}: missing field \"{}\"", where, key));
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw ParseError(fmt::format("{}: field \"{}\" must be an integer", where, key));
    return v.get<int>();
}

std::string get_string(const ordered_json& obj, const char* key, std::string_view where)
{
    if (!obj.contains(key))
        throw ParseError(fmt::format("{}: missing field \"{}\"", where, key));
    const auto& v = obj.at(key);
    if (!v.is_string())
        throw ParseError(fmt::format("{}: field \"{}\" must be a string", where, key));
    return v.get<std::string>();
}

AlgebraElement parse_coef(const ordered_json& coef, std::string_view where)
{
    if (!coef.is_array())
        throw ParseError(fmt::format("{}: coef must be a list of [a, b] pairs", where));
    std::uint8_t mask = 0;
    for (const auto& pair : coef) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ParseError(fmt::format("{}: coef entries must be [a, b] integer pairs", where));
        const int a = pair[0].get<int>();
        const int b = pair[1].get<int>();
        if (a < 0 || a > 1 || b < 0 || b > 3)
            throw ParseError(fmt::format("{}: monomial [{}, {}] out of range", where, a, b));
        const auto bit = static_cast<std::uint8_t>(1U << (4 * a + b));
        if (mask & bit)
            throw ParseError(fmt::format("{}: monomial [{}, {}] repeated", where, a, b));
        mask |= bit;
    }
    return AlgebraElement::from_mask(mask);
}

Target parse_target(const std::string& text, const SwfComplex& c, std::string_view where)
{
    constexpr std::string_view prefix = "FIXED:c";
    if (text.rfind(prefix, 0) == 0) {
        const auto digits = text.substr(prefix.size());
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError(fmt::format("{}: malformed fixed target \"{}\"", where, text));
        return Target::fixed(std::stoi(digits));
    }
    const int idx = c.generator_index(text);
    if (idx < 0)
        throw ParseError(fmt::format("{}: unknown target \"{}\"", where, text));
    return Target::free(idx);
}

}  // namespace

StableClass parse_complex_json(std::string_view text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(fmt::format("malformed JSON: {}", e.what()));
    }
    require_keys(doc, "complex", {"name", "level", "m", "n", "free_generators", "differential"});

    StableClass sc;
    auto& c = sc.complex;
    c.name = get_string(doc, "name", "complex");
    c.level = get_int(doc, "level", "complex");
    if (doc.contains("m")) {
        if (!doc["m"].is_number_integer())
            throw ParseError("complex: field \"m\" must be an integer");
        sc.m = doc["m"].get<std::int64_t>();
    }
    if (doc.contains("n")) {
        if (!doc["n"].is_string())
            throw ParseError("complex: field \"n\" must be a rational string \"p/q\"");
        try {
            sc.n = parse_rational(doc["n"].get<std::string>());
            (void)sc.grading_shift();
        } catch (const std::invalid_argument& e) {
            throw ParseError(fmt::format("complex: {}", e.what()));
        }
    }

    if (!doc.contains("free_generators") || !doc["free_generators"].is_array())
        throw ParseError("complex: field \"free_generators\" must be a list");
    for (const auto& g : doc["free_generators"]) {
        require_keys(g, "free generator", {"name", "degree"});
        FreeGenerator fg{get_string(g, "name", "free generator"), get_int(g, "degree", "free generator")};
        if (c.generator_index(fg.name) >= 0)
            throw ParseError(fmt::format("free generator \"{}\" declared twice", fg.name));
        c.generators.push_back(std::move(fg));
    }
    c.differential.assign(c.generators.size(), {});

    if (doc.contains("differential")) {
        const auto& diff = doc["differential"];
        if (!diff.is_object())
            throw ParseError("complex: field \"differential\" must be an object");
        for (const auto& [gen, terms] : diff.items()) {
            const int idx = c.generator_index(gen);
            const auto where = fmt::format("differential of {}", gen);
            if (idx < 0)
                throw ParseError(fmt::format("differential given for unknown generator \"{}\"", gen));
            if (!terms.is_array())
                throw ParseError(fmt::format("{}: expected a list of terms", where));
            for (const auto& t : terms) {
                require_keys(t, where, {"coef", "target"});
                if (!t.contains("coef"))
                    throw ParseError(fmt::format("{}: missing field \"coef\"", where));
                c.differential[idx].push_back(
                    {parse_coef(t["coef"], where), parse_target(get_string(t, "target", where), c, where)});
            }
        }
    }
    return sc;
}

StableClass read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("cannot open {}", path));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex_json(buf.str());
}

std::string serialize_complex(const StableClass& sc)
{
    const auto& c = sc.complex;
    ordered_json doc;
    doc["name"] = c.name;
    doc["level"] = c.level;
    doc["m"] = sc.m;
    doc["n"] = format_rational(sc.n);
    doc["free_generators"] = ordered_json::array();
    for (const auto& g : c.generators)
        doc["free_generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    doc["differential"] = ordered_json::object();
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        auto terms = ordered_json::array();
        for (const auto& t : c.differential[i]) {
            auto coef = ordered_json::array();
            for (const auto& m : t.coef.monomials())
                coef.push_back({m.s, m.j});
            terms.push_back({{"coef", coef}, {"target", target_name(c, t.target)}});
        }
        doc["differential"][c.generators[i].name] = terms;
    }
    return doc.dump(2) + "\n";
}

}  // namespace swf
