#include "doctest.h"

#include "corpus.hpp"
#include "stoyanov/query.hpp"

using namespace stoyanov;
using namespace stoyanov::cli;

namespace {

const std::string data = TEST_DATA_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run invoke(const std::string& line) {
    Run r;
    r.code = main_with(line, r.out, r.err);
    return r;
}

nlohmann::json cli_json(const std::string& line) { return nlohmann::json::parse(invoke(line + " --json").out); }

}  // namespace

TEST_CASE("parse_query") {
    const auto q = parse_query("check min kappa=beth(w) sigma=beth(w)");
    CHECK(q.command == Command::Check);
    CHECK(q.sub == "min");
    CHECK(q.args.at("kappa") == "beth(w)");
    CHECK(q.args.at("sigma") == "beth(w)");

    const auto a = parse_query("admits F(c) minimal-pseudocompact --assume lusin");
    CHECK(a.command == Command::Admits);
    CHECK(*a.term == Cardinal::continuum());
    CHECK(*a.clazz == TopologyClass::MinimalPseudocompact);
    CHECK(a.assume == std::vector<std::string>{"lusin"});

    const auto s = parse_query("check stoyanov kappa=beth(w1)");
    CHECK(s.args.at("kappa") == "beth(w1)");

    const auto e = parse_query("eval log(sup[aleph(1), aleph(2)]) --seed=4 --json");
    CHECK(e.sub == "log");
    CHECK(*e.seed == 4);
    CHECK(e.json);
}

TEST_CASE("render round trips") {
    for (const char* line :
         {"check min kappa=beth(w) sigma=beth(w)", "admits F(2^aleph(0)) minimal-pseudocompact --assume lusin",
          "admits F(2^aleph(2)) connected-minimal-pseudocompact weight=aleph(2)", "eval m(aleph(1)) --json",
          "eval sup[aleph(1), beth(2)]", "witness min kappa=beth(w) sigma=beth(w) --seed 3",
          "spectrum kappa=beth(w)", "padic oracle x.sub --seed 1 --samples 20", "covering verify f.fam t=2",
          "covering min s=4 t=2", "check cf kappa=aleph(w)", "eval 2^aleph(0) --assume \"2^aleph(1) = aleph(2)\" --context a.ctx"}) {
        const auto q = parse_query(line);
        CHECK(render(q) == line);
        CHECK(parse_query(render(q)) == q);
    }
    // Terms are stored in canonical text.
    CHECK(render(parse_query("eval  (aleph(1))")) == "eval aleph(1)");
}

TEST_CASE("parse errors name a column") {
    auto column = [](const std::string& line) -> std::string {
        try {
            parse_query(line);
        } catch (const UsageError& e) {
            return e.what();
        }
        return "no error";
    };
    CHECK(column("chek min").rfind("column 1 ", 0) == 0);
    CHECK(column("check min kappa=bath(w) sigma=1").rfind("column 11 ", 0) == 0);
    CHECK(column("check min kappa=beth(w sigma=1").rfind("column 11", 0) == 0);
    CHECK(column("check min kappa=1").find("missing parameter sigma") != std::string::npos);
    CHECK(column("check min kappa=1 sigma=1 rho=2").find("unknown parameter") != std::string::npos);
    CHECK(column("admits G(1) minimal").find("F(kappa)") != std::string::npos);
    CHECK(column("eval 1 --frobnicate").find("unknown option") != std::string::npos);
    CHECK(column("covering min s=x t=1").find("integer") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(invoke("admits F(beth(w)) pseudocompact").code == 1);
    CHECK(invoke("admits F(c) minimal-pseudocompact --assume lusin").code == 0);
    CHECK(invoke("admits F(c) minimal-pseudocompact").code == 2);
    CHECK(invoke("check min kappa=aleph(w+2) sigma=aleph(w) --context " + data + "/easton.ctx").code == 0);
    CHECK(invoke("check stoyanov kappa=beth(w1)").code == 1);
    CHECK(invoke("eval log(beth(w))").code == 0);
    CHECK(invoke("check min kappa=1").code == 3);
    CHECK(invoke("admits F(0) minimal").code == 3);
    CHECK(invoke("").code == 3);
    CHECK(invoke("--help").code == 0);
    CHECK(invoke("eval c --context /nonexistent.ctx").code == 3);
    CHECK(invoke("eval 2^aleph(0) --assume CH --assume notCH").code == 3);
    CHECK(invoke("padic minimal " + data + "/z3_full.sub").code == 0);
    CHECK(invoke("padic essential " + data + "/diagonal.sub").code == 1);
    CHECK(invoke("covering verify " + data + "/pairs.fam t=2").code == 0);
    CHECK(invoke("covering verify " + data + "/pairs.fam t=3").code == 1);
    CHECK(invoke("covering min s=7 t=3").code == 3);
}

TEST_CASE("human output") {
    const auto r = invoke("check min kappa=c sigma=aleph(0)");
    CHECK(r.out.rfind("PROVABLE\n 1. ", 0) == 0);
    CHECK(r.out.find("[min-small: ") != std::string::npos);
    CHECK(invoke("admits F(0) minimal").err.find("trivially compact") != std::string::npos);
}

TEST_CASE("machine output") {
    const auto u = cli_json("admits F(c) minimal-pseudocompact");
    CHECK(u["verdict"] == "unknown");
    CHECK(u["version"] == kVersion);
    CHECK(u["trace"].is_array());
    CHECK(u.contains("value"));

    const auto m = cli_json("padic minimal " + data + "/z5_line.sub");
    CHECK(m["verdict"] == "false");
    CHECK(m["reason"] == "not-dense");
    const auto ne = cli_json("padic minimal " + data + "/diagonal.sub");
    CHECK(ne["reason"] == "not-essential");
    CHECK_FALSE(cli_json("padic minimal " + data + "/z3_full.sub").contains("reason"));

    const auto l = cli_json("eval log(aleph(w+2)) --context " + data + "/easton.ctx");
    CHECK(l["value"] == "aleph(0)");
    const auto b = cli_json("eval m(beth(w+1))");
    CHECK(b["value"].is_null());
    CHECK(b["bounds"]["lower_strict"] == true);

    const auto c = cli_json("covering min s=3 t=2");
    CHECK(c["value"] == "4");
    CHECK(c["note"].get<std::string>().find("finite analogue") != std::string::npos);

    for (const auto& t : u["trace"]) {
        CHECK(t.contains("rule"));
        CHECK(t.contains("citation"));
        CHECK(t.contains("conclusion"));
    }
}

TEST_CASE("machine output is byte identical across runs") {
    for (const char* line : {"spectrum kappa=beth(w) --json", "check ps kappa=c sigma=aleph(1) --json --seed 5",
                             "witness min kappa=beth(w) sigma=beth(w) --json"}) {
        const auto a = invoke(line), b = invoke(line);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("--assume overrides the context file with a warning") {
    const auto r = invoke("eval c --context " + data + "/notch.ctx --assume CH --assume 2^aleph(1)=aleph(2)");
    CHECK(r.code == 0);
    CHECK(r.out.find("value: aleph(1)") != std::string::npos);
    CHECK(r.err.find("overrides context file directive notCH") != std::string::npos);
    CHECK(r.err.find("overrides context file directive 2^aleph(1) = aleph(3)") != std::string::npos);
    const auto j = cli_json("eval c --context " + data + "/notch.ctx --assume CH");
    CHECK(j["warnings"].size() == 1);
}

TEST_CASE("join_args quotes words with spaces") {
    CHECK(join_args({"eval", "c", "--assume", "2^aleph(1) = aleph(2)"}) == "eval c --assume \"2^aleph(1) = aleph(2)\"");
    const auto q = parse_query(join_args({"eval", "c", "--assume", "2^aleph(1) = aleph(2)"}));
    CHECK(q.assume.front() == "2^aleph(1) = aleph(2)");
}
