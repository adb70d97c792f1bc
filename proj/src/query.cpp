#include "stoyanov/query.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "stoyanov/covering.hpp"
#include "stoyanov/padic.hpp"

namespace stoyanov::cli {

namespace {

struct Word {
    std::string text;
    std::size_t column;  // 1-based, in the joined input
};

[[noreturn]] void fail_at(const Word& w, const std::string& what) {
    throw UsageError("column " + std::to_string(w.column) + " ('" + w.text + "'): " + what);
}

[[noreturn]] void fail_end(std::size_t column, const std::string& what) {
    throw UsageError("column " + std::to_string(column) + " (end of input): " + what);
}

/// Splits on whitespace outside brackets and double quotes.
std::vector<Word> tokenize(std::string_view in) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < in.size()) {
        if (std::isspace(static_cast<unsigned char>(in[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        std::string text;
        std::vector<char> open;
        bool quoted = false;
        for (; i < in.size(); ++i) {
            const char c = in[i];
            if (quoted) {
                if (c == '"') quoted = false;
                else text += c;
                continue;
            }
            if (c == '"') {
                quoted = true;
                continue;
            }
            if (open.empty() && std::isspace(static_cast<unsigned char>(c))) break;
            if (c == '(' || c == '[') open.push_back(c == '(' ? ')' : ']');
            if (c == ')' || c == ']') {
                if (open.empty() || open.back() != c)
                    throw UsageError("column " + std::to_string(i + 1) + ": unbalanced '" + std::string(1, c) + "'");
                open.pop_back();
            }
            text += c;
        }
        if (quoted) throw UsageError("column " + std::to_string(start + 1) + ": unterminated quote");
        if (!open.empty())
            throw UsageError("column " + std::to_string(start + 1) + ": missing '" + std::string(1, open.back()) + "'");
        out.push_back({std::move(text), start + 1});
    }
    return out;
}

/// Quotes words that the tokenizer would otherwise split.
std::string quote(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth <= 0 && std::isspace(static_cast<unsigned char>(c))) return '"' + s + '"';
    }
    return s;
}

template <class T>
T parse_number(const Word& w, std::string_view digits) {
    T v{};
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || p != digits.data() + digits.size()) fail_at(w, "expected a non-negative integer");
    return v;
}

Cardinal parse_term(const Word& w, std::string_view text) {
    try {
        return parse_cardinal(text);
    } catch (const std::invalid_argument& e) {
        fail_at(w, e.what());
    }
}

const std::set<std::string>& predicates() {
    static const std::set<std::string> p{"min", "stoyanov", "ps", "explog", "cf", "stronglimit"};
    return p;
}

bool takes_sigma(const std::string& predicate) { return predicate == "min" || predicate == "ps"; }

class Parser {
public:
    Parser(std::vector<Word> words, std::size_t end_column) : end_(end_column) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            auto& w = words[i];
            if (w.text.rfind("--", 0) != 0) {
                pos_.push_back(std::move(w));
                continue;
            }
            std::string name = w.text.substr(2), value;
            bool inline_value = false;
            if (auto eq = name.find('='); eq != std::string::npos) {
                value = name.substr(eq + 1);
                name.erase(eq);
                inline_value = true;
            }
            auto take = [&]() -> std::string {
                if (inline_value) return value;
                if (i + 1 >= words.size()) fail_at(w, "option needs a value");
                return words[++i].text;
            };
            if (name == "assume") q_.assume.push_back(take());
            else if (name == "context") q_.context_file = take();
            else if (name == "json") {
                if (inline_value) fail_at(w, "--json takes no value");
                q_.json = true;
            } else if (name == "seed") {
                const std::string v = take();
                q_.seed = parse_number<std::uint64_t>(w, v);
            } else if (name == "samples") {
                const std::string v = take();
                q_.samples = parse_number<std::size_t>(w, v);
            } else fail_at(w, "unknown option");
        }
    }

    Query parse() {
        const Word& cmd = next("a command (eval, check, admits, witness, spectrum, padic, covering)");
        if (cmd.text == "eval") parse_eval();
        else if (cmd.text == "check") parse_check();
        else if (cmd.text == "admits") parse_admits();
        else if (cmd.text == "witness") parse_witness();
        else if (cmd.text == "spectrum") parse_spectrum();
        else if (cmd.text == "padic") parse_padic();
        else if (cmd.text == "covering") parse_covering();
        else fail_at(cmd, "unknown command");
        if (at_ < pos_.size()) fail_at(pos_[at_], "unexpected word");
        return std::move(q_);
    }

private:
    const Word& next(const std::string& expected) {
        if (at_ >= pos_.size()) fail_end(end_, "expected " + expected);
        return pos_[at_++];
    }

    /// key=value words up to the end of the input, restricted to `allowed`.
    void parse_args(const std::set<std::string>& allowed) {
        while (at_ < pos_.size()) {
            const Word& w = pos_[at_++];
            const auto eq = w.text.find('=');
            if (eq == std::string::npos) fail_at(w, "expected key=value");
            const std::string key = w.text.substr(0, eq), value = w.text.substr(eq + 1);
            if (!allowed.count(key)) fail_at(w, "unknown parameter '" + key + "'");
            if (q_.args.count(key)) fail_at(w, "parameter '" + key + "' given twice");
            if (value.empty()) fail_at(w, "empty value");
            if (key == "s" || key == "t") {
                q_.args[key] = std::to_string(parse_number<std::size_t>(w, value));
            } else {
                q_.args[key] = parse_term(w, value).str();
            }
        }
    }

    void require(const std::vector<std::string>& keys) {
        for (const auto& k : keys)
            if (!q_.args.count(k)) fail_end(end_, "missing parameter " + k + "=");
    }

    void parse_eval() {
        q_.command = Command::Eval;
        const Word& w = next("a cardinal term, log(term) or m(term)");
        std::string_view text = w.text;
        q_.sub = "term";
        for (std::string_view f : {"log", "m"}) {
            if (text.size() > f.size() + 2 && text.substr(0, f.size()) == f && text[f.size()] == '(' &&
                text.back() == ')') {
                q_.sub = std::string(f);
                text = text.substr(f.size() + 1, text.size() - f.size() - 2);
                break;
            }
        }
        q_.term = parse_term(w, text);
    }

    void parse_check() {
        q_.command = Command::Check;
        const Word& w = next("a predicate (min, stoyanov, ps, explog, cf, stronglimit)");
        if (!predicates().count(w.text)) fail_at(w, "unknown predicate");
        q_.sub = w.text;
        if (takes_sigma(q_.sub)) {
            parse_args({"kappa", "sigma"});
            require({"kappa", "sigma"});
        } else {
            parse_args({"kappa"});
            require({"kappa"});
        }
    }

    void parse_admits() {
        q_.command = Command::Admits;
        const Word& g = next("a group F(kappa)");
        if (g.text.size() < 4 || g.text.rfind("F(", 0) != 0 || g.text.back() != ')')
            fail_at(g, "expected F(kappa)");
        q_.term = parse_term(g, std::string_view(g.text).substr(2, g.text.size() - 3));
        const Word& c = next("a topology class");
        try {
            q_.clazz = parse_topology_class(c.text);
        } catch (const std::invalid_argument& e) {
            fail_at(c, e.what());
        }
        parse_args({"weight"});
    }

    void parse_witness() {
        q_.command = Command::Witness;
        const Word& w = next("a witness kind (min)");
        if (w.text != "min") fail_at(w, "unknown witness kind");
        q_.sub = w.text;
        parse_args({"kappa", "sigma"});
        require({"kappa", "sigma"});
    }

    void parse_spectrum() {
        q_.command = Command::Spectrum;
        parse_args({"kappa"});
        require({"kappa"});
    }

    void parse_padic() {
        q_.command = Command::Padic;
        const Word& w = next("a padic subcommand (essential, dense, minimal, closure, oracle)");
        static const std::set<std::string> subs{"essential", "dense", "minimal", "closure", "oracle"};
        if (!subs.count(w.text)) fail_at(w, "unknown padic subcommand");
        q_.sub = w.text;
        q_.file = next("a subgroup file").text;
    }

    void parse_covering() {
        q_.command = Command::Covering;
        const Word& w = next("a covering subcommand (verify, min, bound)");
        q_.sub = w.text;
        if (w.text == "verify") {
            q_.file = next("a family file").text;
            parse_args({"t"});
            require({"t"});
        } else if (w.text == "min" || w.text == "bound") {
            parse_args({"s", "t"});
            require({"s", "t"});
        } else {
            fail_at(w, "unknown covering subcommand");
        }
    }

    Query q_;
    std::vector<Word> pos_;
    std::size_t at_ = 0;
    std::size_t end_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Cardinal arg(const Query& q, const std::string& key) { return parse_cardinal(q.args.at(key)); }

std::size_t size_arg(const Query& q, const std::string& key) { return std::stoul(q.args.at(key)); }

bool conflicts(Assumption a, Assumption b) {
    auto pair = [&](Assumption x, Assumption y) { return (a == x && b == y) || (a == y && b == x); };
    return pair(Assumption::CH, Assumption::NotCH) || pair(Assumption::GCH, Assumption::NotCH) ||
           pair(Assumption::GCH, Assumption::Lusin);
}

Result verdict_result(Verdict v) {
    Result r;
    r.kind = Result::Kind::Verdict;
    r.verdict = v.value;
    r.trace = std::move(v.trace);
    return r;
}

Result boolean_result(bool b, Trace trace) {
    Result r;
    r.kind = Result::Kind::Boolean;
    r.flag = b;
    r.trace = std::move(trace);
    return r;
}

nlohmann::json bounds_json(const Bounds& b) {
    return {{"lower", b.lower.str()}, {"lower_strict", b.lower_strict}, {"upper", b.upper.str()}};
}

Result estimate_result(Estimate e) {
    Result r;
    if (e.exact) r.value = e.exact->str();
    r.extra["bounds"] = bounds_json(e.bounds);
    r.trace = std::move(e.trace);
    return r;
}

std::string vector_text(const padic::Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

Result run_check(const Query& q, Engine& engine) {
    auto& r = engine.reasoner();
    const Cardinal kappa = arg(q, "kappa");
    if (q.sub == "min") return verdict_result(engine.min_cond(kappa, arg(q, "sigma")));
    if (q.sub == "ps") return verdict_result(engine.ps_cond(kappa, arg(q, "sigma")));
    if (q.sub == "stoyanov") return verdict_result(engine.is_stoyanov(kappa));
    if (q.sub == "stronglimit") return verdict_result(r.is_strong_limit(kappa));
    if (q.sub == "explog") {
        auto e = r.is_exponential(kappa);
        Result out = verdict_result(std::move(e.verdict));
        if (e.base) out.value = e.base->str();
        return out;
    }
    auto cf = r.cofinality(kappa);
    if (cf.value == Cofinality::Unknown) {
        Result out = verdict_result(Verdict{Truth::Unknown, std::move(cf.trace)});
        return out;
    }
    Result out;
    out.value = to_string(cf.value);
    out.trace = std::move(cf.trace);
    return out;
}

Result run_padic(const Query& q) {
    const padic::Subgroup h = padic::parse_subgroup(read_file(q.file));
    Trace trace;
    if (q.sub == "essential") {
        const bool ok = padic::essential(h);
        for (const auto& c : h.ambient.components())
            trace.push_back(make_step("essential-rank", "rank of H in the " + std::to_string(c.prime) + "-block is " +
                                                            std::to_string(padic::block_rank(h, c.prime)) + " of " +
                                                            std::to_string(c.rank)));
        return boolean_result(ok, std::move(trace));
    }
    if (q.sub == "dense") {
        const bool ok = padic::dense(h);
        for (const auto& c : h.ambient.components())
            trace.push_back(make_step("dense-mod-p", "rank mod " + std::to_string(c.prime) + " is " +
                                                         std::to_string(padic::mod_p_rank(h, c.prime)) + " of " +
                                                         std::to_string(c.rank)));
        return boolean_result(ok, std::move(trace));
    }
    if (q.sub == "minimal") {
        const auto m = padic::minimal_check(h);
        trace.push_back(make_step("minimality-criterion", m.minimal ? "H is dense and essential, hence minimal"
                                                                    : "H is not minimal: " + to_string(*m.reason)));
        Result out = boolean_result(m.minimal, std::move(trace));
        if (m.reason) out.extra["reason"] = to_string(*m.reason);
        return out;
    }
    if (q.sub == "closure") {
        const auto c = padic::essential_closure(h);
        Result out;
        nlohmann::json rows = nlohmann::json::array();
        std::string text;
        for (const auto& g : c.generators) {
            rows.push_back(vector_text(g));
            text += (text.empty() ? "" : " ") + vector_text(g);
        }
        out.value = text;
        out.extra["generators"] = rows;
        out.extra["added"] = c.generators.size() - h.generators.size();
        out.trace.push_back(make_step("essential-rank", "closure has full rank " + std::to_string(padic::free_rank(c))));
        return out;
    }
    const std::size_t samples = q.samples.value_or(500);
    const std::uint64_t seed = q.seed.value_or(0);
    const bool ok = padic::essential_oracle(h, samples, seed);
    trace.push_back(make_step("essential-sampling", std::to_string(samples) + " samples per component, seed " +
                                                        std::to_string(seed) + (ok ? ": no miss found" : ": miss found")));
    Result out = boolean_result(ok, std::move(trace));
    out.extra["samples"] = samples;
    out.extra["seed"] = seed;
    return out;
}

Result run_covering(const Query& q) {
    const std::size_t t = size_arg(q, "t");
    if (q.sub == "verify") {
        const auto f = covering::parse_family(read_file(q.file));
        const bool ok = covering::is_t_dense(f, t);
        Result out = boolean_result(
            ok, {make_step("dense-family-check", std::to_string(f.size()) + " rows of width " + std::to_string(f.width()) +
                                                     (ok ? " are " : " are not ") + std::to_string(t) + "-dense")});
        return out;
    }
    const std::size_t s = size_arg(q, "s");
    Result out;
    out.extra["note"] = "finite analogue of m(sigma): least size of a t-dense family in {0,1}^s";
    if (q.sub == "bound") {
        out.value = std::to_string(covering::lower_bound(s, t));
        out.trace.push_back(make_step("dense-family-bound", "m_fin(" + std::to_string(s) + ", " + std::to_string(t) +
                                                                ") >= " + *out.value));
        return out;
    }
    const auto f = covering::optimal_family(s, t);
    out.value = std::to_string(f.size());
    nlohmann::json rows = nlohmann::json::array();
    std::istringstream lines(f.to_string());
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    out.extra["family"] = rows;
    out.trace.push_back(make_step("dense-family-search",
                                  "m_fin(" + std::to_string(s) + ", " + std::to_string(t) + ") = " + *out.value));
    return out;
}

}  // namespace

Query parse_query(std::string_view input) {
    auto words = tokenize(input);
    return Parser(std::move(words), input.size() + 1).parse();
}

std::string render(const Query& q) {
    std::vector<std::string> out;
    auto args = [&](const std::vector<std::string>& keys) {
        for (const auto& k : keys)
            if (auto it = q.args.find(k); it != q.args.end()) out.push_back(k + "=" + it->second);
    };
    switch (q.command) {
        case Command::Eval:
            out.push_back("eval");
            out.push_back(q.sub == "term" || q.sub.empty() ? q.term->str() : q.sub + "(" + q.term->str() + ")");
            break;
        case Command::Check:
            out = {"check", q.sub};
            args({"kappa", "sigma"});
            break;
        case Command::Admits:
            out = {"admits", "F(" + q.term->str() + ")", to_string(*q.clazz)};
            args({"weight"});
            break;
        case Command::Witness:
            out = {"witness", q.sub};
            args({"kappa", "sigma"});
            break;
        case Command::Spectrum:
            out = {"spectrum"};
            args({"kappa"});
            break;
        case Command::Padic: out = {"padic", q.sub, q.file}; break;
        case Command::Covering:
            out = {"covering", q.sub};
            if (q.sub == "verify") out.push_back(q.file);
            args({"s", "t"});
            break;
    }
    for (const auto& a : q.assume) out.push_back("--assume " + quote(a));
    if (q.context_file) out.push_back("--context " + quote(*q.context_file));
    if (q.json) out.push_back("--json");
    if (q.seed) out.push_back("--seed " + std::to_string(*q.seed));
    if (q.samples) out.push_back("--samples " + std::to_string(*q.samples));
    std::string s;
    for (const auto& w : out) s += (s.empty() ? "" : " ") + (w.rfind("--", 0) == 0 ? w : quote(w));
    return s;
}

ResolvedContext resolve_context(const Query& q) {
    ContextDirectives file;
    std::vector<std::string> warnings;
    if (q.context_file) {
        try {
            file = parse_context_text(read_file(*q.context_file));
        } catch (const std::invalid_argument& e) {
            throw UsageError("context file '" + *q.context_file + "': " + e.what());
        }
    }
    ContextDirectives cli;
    for (const auto& a : q.assume) {
        ContextDirectives one;
        try {
            parse_directive(a, one);
        } catch (const std::invalid_argument& e) {
            throw UsageError("--assume '" + a + "': " + e.what());
        }
        for (auto f : one.flags) {
            auto& fl = file.flags;
            for (auto it = fl.begin(); it != fl.end();) {
                if (conflicts(f, *it)) {
                    warnings.push_back("warning: --assume " + a + " overrides context file directive " +
                                       to_string(*it));
                    it = fl.erase(it);
                } else {
                    ++it;
                }
            }
            cli.flags.push_back(f);
        }
        for (auto& e : one.equalities) {
            auto& eqs = file.equalities;
            for (auto it = eqs.begin(); it != eqs.end();) {
                if (it->argument == e.argument) {
                    warnings.push_back("warning: --assume " + a + " overrides context file directive 2^" +
                                       it->argument.str() + " = " + it->value.str());
                    it = eqs.erase(it);
                } else {
                    ++it;
                }
            }
            cli.equalities.push_back(std::move(e));
        }
    }
    ContextDirectives merged = std::move(file);
    merged.flags.insert(merged.flags.end(), cli.flags.begin(), cli.flags.end());
    merged.equalities.insert(merged.equalities.end(), cli.equalities.begin(), cli.equalities.end());
    try {
        return {build_context(merged), std::move(warnings)};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int Result::exit_code() const {
    switch (kind) {
        case Kind::Verdict: return verdict == Truth::Provable ? 0 : verdict == Truth::Refutable ? 1 : 2;
        case Kind::Boolean: return flag ? 0 : 1;
        case Kind::Value: return 0;
    }
    return 2;
}

Result run(const Query& q, const AxiomContext& ctx) {
    Engine engine(ctx, q.seed);
    auto& r = engine.reasoner();
    switch (q.command) {
        case Command::Eval: {
            if (q.sub == "log") return estimate_result(r.log_card(*q.term));
            if (q.sub == "m") return estimate_result(r.m_bounds(*q.term));
            Result out;
            const Cardinal n = r.normalize(*q.term);
            out.value = n.str();
            out.trace.push_back(make_step("normalize", q.term->str() + " = " + n.str()));
            return out;
        }
        case Command::Check: return run_check(q, engine);
        case Command::Admits: {
            std::optional<Cardinal> weight;
            if (auto it = q.args.find("weight"); it != q.args.end()) weight = parse_cardinal(it->second);
            return verdict_result(engine.admits({*q.term, *q.clazz, weight}));
        }
        case Command::Witness: {
            const auto w = engine.witness_min(arg(q, "kappa"), arg(q, "sigma"));
            Result out = verdict_result(engine.verify_witness(w));
            out.value = w.describe();
            nlohmann::json first = nlohmann::json::array();
            for (std::uint64_t n = 0; n < 6; ++n) first.push_back(w.element(n).str());
            out.extra["elements"] = first;
            return out;
        }
        case Command::Spectrum: {
            auto s = engine.weight_spectrum(arg(q, "kappa"));
            Result out;
            out.value = s.description;
            out.extra["exponential"] = std::string(to_string(s.exponential.value));
            out.extra["complete"] = s.complete;
            nlohmann::json members = nlohmann::json::array();
            for (const auto& m : s.members)
                members.push_back({{"sigma", m.sigma.str()}, {"verdict", std::string(to_string(m.verdict.value))}});
            out.extra["members"] = members;
            out.trace = std::move(s.exponential.trace);
            return out;
        }
        case Command::Padic: return run_padic(q);
        case Command::Covering: return run_covering(q);
    }
    throw UsageError("unhandled command");
}

std::string format(const Result& r, bool machine) {
    std::string head;
    switch (r.kind) {
        case Result::Kind::Verdict: head = std::string(to_string(r.verdict)); break;
        case Result::Kind::Boolean: head = r.flag ? "true" : "false"; break;
        case Result::Kind::Value: head = "value"; break;
    }
    if (machine) {
        nlohmann::json j = r.extra;
        j["verdict"] = head;
        j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& s : r.trace)
            trace.push_back({{"rule", s.rule}, {"citation", s.citation}, {"conclusion", s.conclusion}});
        j["trace"] = trace;
        j["version"] = kVersion;
        if (!r.warnings.empty()) j["warnings"] = r.warnings;
        return j.dump() + "\n";
    }
    std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::toupper(c); });
    std::string out = head + "\n" + explain(r.trace);
    if (r.value) out += "value: " + *r.value + "\n";
    for (const auto& [k, v] : r.extra.items()) out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return out;
}

std::string usage() {
    return "usage: stoyanov <command> [options]\n"
           "\n"
           "commands:\n"
           "  eval <term> | eval log(<term>) | eval m(<term>)\n"
           "  check {min|ps} kappa=<term> sigma=<term>\n"
           "  check {stoyanov|explog|cf|stronglimit} kappa=<term>\n"
           "  admits F(<term>) <class> [weight=<term>]\n"
           "      classes: minimal pseudocompact minimal-pseudocompact zero-dim-minimal-pseudocompact\n"
           "               connected-minimal connected-minimal-pseudocompact locally-connected-minimal\n"
           "  witness min kappa=<term> sigma=<term>\n"
           "  spectrum kappa=<term>\n"
           "  padic {essential|dense|minimal|closure|oracle} <file>\n"
           "  covering verify <file> t=<n> | covering {min|bound} s=<n> t=<n>\n"
           "\n"
           "options:\n"
           "  --assume <directive>   GCH, CH, notCH, lusin or 2^<atom>=<term>; repeatable\n"
           "  --context <file>       one directive per line; --assume wins on conflict\n"
           "  --json                 machine readable output\n"
           "  --seed <n>             rule order / sampling seed\n"
           "  --samples <n>          padic oracle samples per component (default 500)\n"
           "\n"
           "terms: n, c, aleph(i), beth(i), 2^t, poww(t), weakpow(t), sup[t, ...]; i is an ordinal below\n"
           "       w^w-style CNF (w, w+1, w*2, w^2) or w1\n"
           "exit codes: 0 provable / value / true, 1 refutable / false, 2 unknown, 3 error\n";
}

std::string join_args(const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) s += (s.empty() ? "" : " ") + quote(w);
    return s;
}

int main_with(std::string_view input, std::string& out, std::string& err) {
    bool machine = false;
    try {
        const std::string trimmed(input);
        if (trimmed.find_first_not_of(" \t\n") == std::string::npos) {
            err += usage();
            return 3;
        }
        if (trimmed == "--help" || trimmed == "-h" || trimmed == "help") {
            out += usage();
            return 0;
        }
        const Query q = parse_query(input);
        machine = q.json;
        auto resolved = resolve_context(q);
        Result r = run(q, resolved.context);
        r.warnings = resolved.warnings;
        if (!machine)
            for (const auto& w : r.warnings) err += w + "\n";
        out += format(r, machine);
        return r.exit_code();
    } catch (const std::exception& e) {
        const bool trivial = dynamic_cast<const TrivialGroupError*>(&e) != nullptr;
        const bool usage_error = dynamic_cast<const UsageError*>(&e) != nullptr;
        const std::string kind = trivial ? "trivially-compact" : usage_error ? "usage" : "error";
        if (machine) {
            nlohmann::json j{{"verdict", kind}, {"error", e.what()}, {"value", nullptr},
                             {"trace", nlohmann::json::array()}, {"version", kVersion}};
            out += j.dump() + "\n";
        }
        err += (trivial ? "trivially compact: " : "error: ") + std::string(e.what()) + "\n";
        return 3;
    }
}

}  // namespace stoyanov::cli
