// pcanon: canonical forms, orbit deciders and orbit censuses for matrices
// under Borel, unipotent and parabolic subgroups.
//
// Exit codes: 0 success / related, 1 not related / checks failed, 2 usage
// or input error.

#include <pcanon/census.hpp>
#include <pcanon/congr.hpp>
#include <pcanon/equiv.hpp>
#include <pcanon/orbits.hpp>
#include <pcanon/parabolic.hpp>
#include <pcanon/verify.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <iostream>
#include <optional>

using namespace pcanon;
using nlohmann::json;

namespace {

constexpr int kRelated = 0;
constexpr int kNotRelated = 1;
constexpr int kUsage = 2;

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.field().format(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"field", m.field().name()}, {"n", m.n()}, {"rows", std::move(rows)}};
}

json table_json(const InvariantTable& t) { return t.values; }

void print_matrix(const Matrix& m, std::string_view title = {}) {
    if (!title.empty()) std::cout << "# " << title << '\n';
    std::cout << format_matrix(m);
}

struct CanonArgs {
    std::string action;
    std::string in;
    bool witness = false;
    bool json_out = false;
};

int run_canon(const CanonArgs& a) {
    const Matrix x = read_matrix_file(a.in);
    std::optional<EquivResult> eq;
    std::optional<CongrResult> co;
    if (a.action == "b-equiv") eq = b_equiv_canonical(x);
    else if (a.action == "u-equiv") eq = u_equiv_canonical(x);
    else if (a.action == "u-congr") co = u_congr_canonical(x);
    else co = b_congr_canonical(x);

    const Matrix& y = eq ? eq->canonical : co->canonical;
    if (a.json_out) {
        json out{{"action", a.action}, {"canonical", matrix_json(y)}};
        if (a.witness) {
            if (eq) out["witness"] = {{"h", matrix_json(eq->witness.h)}, {"k", matrix_json(eq->witness.k)}};
            else out["witness"] = {{"u", matrix_json(co->witness.u)}};
        }
        std::cout << out.dump() << '\n';
        return kRelated;
    }
    print_matrix(y);
    if (a.witness) {
        if (eq) {
            print_matrix(eq->witness.h, "witness h (h' X k = Y)");
            print_matrix(eq->witness.k, "witness k");
        } else {
            print_matrix(co->witness.u, "witness u (u' X u = Y)");
        }
    }
    return kRelated;
}

struct DecideArgs {
    std::string parabolic;
    std::string group;
    std::string a, b;
    bool json_out = false;
};

Group parse_group(const std::string& g) {
    if (g == "U") return Group::U;
    if (g == "B") return Group::B;
    throw Error(ErrorCode::Parse, "group must be U or B");
}

int report(bool related, json out, bool json_out) {
    out["related"] = related;
    if (json_out) std::cout << out.dump() << '\n';
    else std::cout << (related ? "related" : "not related") << '\n';
    return related ? kRelated : kNotRelated;
}

int run_equiv(const DecideArgs& a) {
    const Matrix c = read_matrix_file(a.a);
    const Matrix d = read_matrix_file(a.b);
    require_same_space(c, d);
    if (!a.parabolic.empty()) {
        const auto p = parse_composition(a.parabolic);
        const auto r = p_equivalent_report(c, d, p);
        return report(r.related,
                      {{"parabolic", p.to_string()},
                       {"block_rank", {table_json(r.block_rank_c), table_json(r.block_rank_d)}},
                       {"cross_count", {table_json(r.cross_c), table_json(r.cross_d)}}},
                      a.json_out);
    }
    const Group g = parse_group(a.group);
    const auto rc = g == Group::B ? b_equiv_canonical(c) : u_equiv_canonical(c);
    const auto rd = g == Group::B ? b_equiv_canonical(d) : u_equiv_canonical(d);
    return report(rc.canonical == rd.canonical,
                  {{"group", a.group}, {"canonical", {matrix_json(rc.canonical), matrix_json(rd.canonical)}}},
                  a.json_out);
}

int run_congr(const DecideArgs& a) {
    const Matrix c = read_matrix_file(a.a);
    const Matrix d = read_matrix_file(a.b);
    require_same_space(c, d);
    if (!a.parabolic.empty()) {
        const auto p = parse_composition(a.parabolic);
        const FormKind kind =
            is_alternating(c) && is_alternating(d) ? FormKind::Alternating : FormKind::Symmetric;
        const auto r = p_congruent_report(c, d, p, kind);
        auto pairs = [](const ReducedPermutation& s) {
            json out = json::array();
            for (auto [i, j] : s.transpositions) out.push_back({i + 1, j + 1});
            return out;
        };
        return report(r.related,
                      {{"parabolic", p.to_string()},
                       {"kind", kind == FormKind::Alternating ? "alternating" : "symmetric"},
                       {"condition_a", r.condition_a},
                       {"reduced", {pairs(r.reduced_c), pairs(r.reduced_d)}}},
                      a.json_out);
    }
    const Group g = parse_group(a.group);
    const auto rc = congr_canonical(c, g);
    const auto rd = congr_canonical(d, g);
    return report(rc.canonical == rd.canonical,
                  {{"group", a.group}, {"canonical", {matrix_json(rc.canonical), matrix_json(rd.canonical)}}},
                  a.json_out);
}

int run_invariants(const std::string& parabolic, const std::string& in) {
    const Matrix c = read_matrix_file(in);
    const auto p = parse_composition(parabolic);
    const auto y = b_equiv_canonical(c).canonical;
    json out{{"parabolic", p.to_string()},
             {"block_rank", table_json(block_rank_table(c, p))},
             {"cross_count", table_json(cross_counts(y, p))}};
    std::cout << out.dump() << '\n';
    return kRelated;
}

struct CensusArgs {
    std::string recurrence;
    std::string enumerate;
    bool brute = false;
    std::string field = "GF(2)";
    unsigned n = 0;
    std::string group = "B";
    std::string parabolic;
    std::string relation = "equiv";
    std::string cls = "all";
    bool reps = false;
    int threads = 0;
    std::uint64_t budget = oracle::kDefaultBudget;
    bool json_out = false;
};

int print_census(const OrbitCensus& c, const CensusArgs& a) {
    if (a.json_out) {
        json out{{"n", c.n}, {"action", c.action}, {"count", c.count.str()}};
        if (a.reps) {
            json reps = json::array();
            for (const auto& m : c.representatives) reps.push_back(matrix_json(m));
            out["representatives"] = std::move(reps);
        }
        std::cout << out.dump() << '\n';
        return kRelated;
    }
    std::cout << c.count.str() << '\n';
    if (a.reps)
        for (std::size_t i = 0; i < c.representatives.size(); ++i)
            print_matrix(c.representatives[i], fmt::format("representative {}", i + 1));
    return kRelated;
}

int run_census(const CensusArgs& a) {
    const int modes = !a.recurrence.empty() + !a.enumerate.empty() + a.brute;
    if (modes != 1) throw Error(ErrorCode::Parse, "choose exactly one of --recurrence, --enumerate, --brute");
    if (!a.recurrence.empty()) {
        if (a.recurrence == "alt") std::cout << count_alt_orbits(a.n).str() << '\n';
        else if (a.recurrence == "sym") std::cout << count_sym_orbits(a.n).str() << '\n';
        else throw Error(ErrorCode::Parse, "--recurrence takes alt or sym");
        return kRelated;
    }
    const auto field = Field::parse(a.field);
    if (!a.enumerate.empty()) {
        CanformKind kind;
        if (a.enumerate == "alt") kind = CanformKind::AltOneMinusOne;
        else if (a.enumerate == "sym") kind = CanformKind::SymZeroOneSubperm;
        else if (a.enumerate == "spp") kind = CanformKind::SpecializedPseudoPerm;
        else if (a.enumerate == "spp01") kind = CanformKind::SpecializedPseudoPermZeroOne;
        else throw Error(ErrorCode::Parse, "--enumerate takes alt, sym, spp or spp01");
        return print_census(enumerate_canforms(a.n, kind, field, a.reps), a);
    }
    oracle::OrbitProblem pb;
    pb.field = field;
    pb.n = a.n;
    pb.budget = a.budget;
    if (a.group == "U") pb.group = oracle::GroupKind::U;
    else if (a.group == "B") pb.group = oracle::GroupKind::B;
    else if (a.group == "P") pb.group = oracle::GroupKind::P;
    else throw Error(ErrorCode::Parse, "--group takes U, B or P");
    if (pb.group == oracle::GroupKind::P) {
        if (a.parabolic.empty()) throw Error(ErrorCode::Parse, "--group P needs --parabolic");
        pb.parabolic = parse_composition(a.parabolic);
    }
    if (a.relation == "equiv") pb.relation = oracle::Relation::Equivalence;
    else if (a.relation == "congr") pb.relation = oracle::Relation::Congruence;
    else throw Error(ErrorCode::Parse, "--relation takes equiv or congr");
    if (a.cls == "all") pb.matrix_class = oracle::MatrixClass::All;
    else if (a.cls == "sym") pb.matrix_class = oracle::MatrixClass::Symmetric;
    else if (a.cls == "alt") pb.matrix_class = oracle::MatrixClass::Alternating;
    else throw Error(ErrorCode::Parse, "--class takes all, sym or alt");
    return print_census(brute_census(pb, a.reps, a.threads), a);
}

int run_verify(const std::string& suite, const verify::Options& opt) {
    const auto results = verify::run_suite(verify::parse_suite(suite), opt);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << verify::format_result(r) << '\n';
        ok = ok && r.passed;
    }
    return ok ? kRelated : kNotRelated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical forms and orbit deciders for matrices under Borel and parabolic subgroups"};
    app.require_subcommand(1);

    CanonArgs canon;
    auto* c = app.add_subcommand("canon", "print the canonical form of a matrix");
    c->add_option("--action", canon.action, "b-equiv, u-equiv, u-congr or b-congr")
        ->required()
        ->check(CLI::IsMember({"b-equiv", "u-equiv", "u-congr", "b-congr"}));
    c->add_option("--in", canon.in, "matrix file")->required();
    c->add_flag("--witness", canon.witness, "also print the transforming matrices");
    c->add_flag("--json", canon.json_out, "JSON output");

    DecideArgs eq, co;
    for (auto [name, args, help] : {std::tuple{"equiv", &eq, "decide equivalence (h' A k = B)"},
                                    std::tuple{"congr", &co, "decide congruence (h' A h = B)"}}) {
        auto* s = app.add_subcommand(name, help);
        auto* par = s->add_option("--parabolic", args->parabolic, "composition of n, e.g. 2,1,1");
        s->add_option("--group", args->group, "U or B")->excludes(par);
        s->add_option("A", args->a, "first matrix file")->required();
        s->add_option("B", args->b, "second matrix file")->required();
        s->add_flag("--json", args->json_out, "JSON output");
    }

    std::string inv_parabolic, inv_in;
    auto* inv = app.add_subcommand("invariants", "block ranks and cross counts as JSON");
    inv->add_option("--parabolic", inv_parabolic, "composition of n")->required();
    inv->add_option("--in", inv_in, "matrix file")->required();

    CensusArgs census;
    auto* cs = app.add_subcommand("census", "orbit counts");
    cs->add_option("--recurrence", census.recurrence, "alt or sym");
    cs->add_option("--enumerate", census.enumerate, "alt, sym, spp or spp01");
    cs->add_flag("--brute", census.brute, "brute-force orbit partition");
    cs->add_option("--field", census.field, "GF(p), GF(2^k) or TOWER(p)");
    cs->add_option("--n", census.n, "matrix size")->required();
    cs->add_option("--group", census.group, "U, B or P");
    cs->add_option("--parabolic", census.parabolic, "composition for --group P");
    cs->add_option("--relation", census.relation, "equiv or congr");
    cs->add_option("--class", census.cls, "all, sym or alt");
    cs->add_flag("--reps", census.reps, "print the representatives");
    cs->add_option("--threads", census.threads, "oracle threads (1 = serial)");
    cs->add_option("--budget", census.budget, "cap on generator applications");
    cs->add_flag("--json", census.json_out, "JSON output");

    std::string suite = "all";
    verify::Options vopt;
    auto* ver = app.add_subcommand("verify", "run the oracle suites");
    ver->add_option("--suite", suite, "all, equiv, congr, parabolic, census or field");
    ver->add_option("--seed", vopt.seed, "seed for randomized checks");
    ver->add_option("--threads", vopt.threads, "oracle threads (1 = serial)");
    ver->add_option("--cases", vopt.random_cases, "random cases per randomized check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c) return run_canon(canon);
        if (app.got_subcommand("equiv")) {
            if (eq.parabolic.empty() == eq.group.empty()) throw Error(ErrorCode::Parse, "give --parabolic or --group");
            return run_equiv(eq);
        }
        if (app.got_subcommand("congr")) {
            if (co.parabolic.empty() == co.group.empty()) throw Error(ErrorCode::Parse, "give --parabolic or --group");
            return run_congr(co);
        }
        if (*inv) return run_invariants(inv_parabolic, inv_in);
        if (*cs) return run_census(census);
        if (*ver) return run_verify(suite, vopt);
    } catch (const std::exception& e) {
        std::cerr << "pcanon: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
