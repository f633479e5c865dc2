#include "zkn/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zkn/json_io.hpp"

namespace zkn {

namespace {

struct Options {
    std::optional<int> k, j, m, level;
    long samples = 100;
    std::uint64_t seed = 0;
    std::optional<int> degree;
    std::optional<int> twist;
    std::optional<int> to;
    bool with_basis = false;
    bool cross_check = false;
    std::string input;
    std::string output;
};

void add_ring_flags(CLI::App* sub, Options& opt)
{
    sub->add_option("--k", opt.k, "self-intersection is -k (k >= 1)");
    sub->add_option("--m", opt.m, "truncation: functions mod u^m (m >= 1)");
    sub->add_option("--level", opt.level, "neighbourhood order n; sets m = n + 1")->excludes("--m");
}

void add_moduli_flags(CLI::App* sub, Options& opt)
{
    add_ring_flags(sub, opt);
    sub->add_option("--j", opt.j, "splitting type O(j) + O(-j) (j >= 1)");
}

void add_payload_flag(CLI::App* sub, Options& opt)
{
    sub->add_option("--input", opt.input, "payload file (default: standard input)");
}

RingParams ring_params(const Options& opt)
{
    if (!opt.k)
        throw InvalidInput("--k is required");
    if (!opt.m && !opt.level)
        throw InvalidInput("--m or --level is required");
    if (opt.level && *opt.level < 0)
        throw InvalidInput("--level must be >= 0");
    RingParams ring{*opt.k, opt.m ? *opt.m : *opt.level + 1};
    ring.validate();
    return ring;
}

ModuliParams moduli_params(const Options& opt)
{
    const RingParams ring = ring_params(opt);
    if (!opt.j)
        throw InvalidInput("--j is required");
    ModuliParams params{ring, *opt.j};
    params.validate();
    return params;
}

Json read_payload(const Options& opt, std::istream& in)
{
    std::string text;
    if (!opt.input.empty()) {
        std::ifstream file(opt.input);
        if (!file)
            throw InvalidInput("cannot open input file '" + opt.input + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
    } else {
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON payload: ") + e.what());
    }
}

Json basis_json(const ModuliParams& params)
{
    Json indices = Json::array();
    for (const auto& mono : basis_W(params))
        indices.push_back({mono.i, mono.l});
    return {{"dim", indices.size()}, {"indices", indices}};
}

Json arrow_json(const GroupElem& g, const ExtClass& source)
{
    return {{"g", to_json(g)}, {"source", to_json(source)}, {"target", to_json(act(g, source))}};
}

struct Outcome {
    Json value;
    int code = kExitOk;
};

Outcome run_verb(const std::string& verb, const Options& opt, std::istream& in)
{
    if (verb == "basis")
        return {basis_json(moduli_params(opt))};

    if (verb == "cone-check") {
        const RingParams ring = ring_params(opt);
        const ConeReport report = cone_check(ring.k, ring.m);
        return {to_json(report), report.passed() ? kExitOk : kExitConsistency};
    }

    if (verb == "cohomology") {
        const RingParams ring = ring_params(opt);
        if (!opt.twist)
            throw InvalidInput("--s is required");
        const int s = *opt.twist;
        Json h0 = Json::array(), h1 = Json::array();
        for (const auto& mono : h0_basis(s, ring))
            h0.push_back({mono.i, mono.l});
        for (const auto& mono : h1_basis(s, ring))
            h1.push_back({mono.i, mono.l});
        return {{{"h0_basis", h0},
                 {"h0_dim", h0_dim(s, ring)},
                 {"h1_basis", h1},
                 {"h1_dim", h1_dim(s, ring)},
                 {"k", ring.k},
                 {"m", ring.m},
                 {"s", s}}};
    }

    const ModuliParams params = moduli_params(opt);

    if (verb == "check-axioms") {
        if (opt.samples < 0)
            throw InvalidInput("--samples must be >= 0");
        const VerificationReport groupoid = verify_groupoid(params, opt.samples, opt.seed);
        Json out = to_json(groupoid);
        bool passed = groupoid.passed();
        if (params.m() >= 2) {
            const VerificationReport system = verify_inverse_system(params, opt.samples, opt.seed);
            const Json extra = to_json(system)["families"];
            out["families"].insert(out["families"].end(), extra.begin(), extra.end());
            passed = passed && system.passed();
        }
        out["passed"] = passed;
        return {out, passed ? kExitOk : kExitConsistency};
    }

    const Json payload = read_payload(opt, in);

    if (verb == "reduce") {
        const RingElem y = ring_elem_from_json(payload);
        if (!(y.params() == params.ring))
            throw InvalidInput("cocycle k/m do not match --k/--m");
        const CocycleReduction r = reduce_cocycle(y, params);
        return {{{"f_u", to_json(r.f_u)}, {"f_v", to_json(r.f_v)}, {"p", to_json(r.p)}}};
    }
    if (verb == "act") {
        require_keys(payload, {"g", "p"});
        return {to_json(act(group_elem_from_json(payload["g"], params), ext_class_from_json(payload["p"], params)))};
    }
    if (verb == "compose") {
        require_keys(payload, {"g1", "g2", "p"});
        const GroupElem g1 = group_elem_from_json(payload["g1"], params);
        const GroupElem g2 = group_elem_from_json(payload["g2"], params);
        const ExtClass p = ext_class_from_json(payload["p"], params);
        return {arrow_json(induced_product(g1, g2, p), p)};
    }
    if (verb == "invert-g") {
        require_keys(payload, {"g", "p"});
        const GroupElem g = group_elem_from_json(payload["g"], params);
        const ExtClass p = ext_class_from_json(payload["p"], params);
        return {arrow_json(induced_inverse(g, p), act(g, p))};
    }
    if (verb == "restrict") {
        if (!opt.to)
            throw InvalidInput("--to is required");
        if (*opt.to < 1 || *opt.to > params.m())
            throw InvalidInput("--to must lie in [1, m]");
        if (payload.is_object() && payload.contains("a"))
            return {to_json(restrict_level(group_elem_from_json(payload, params), *opt.to))};
        return {to_json(restrict_level(ext_class_from_json(payload, params), *opt.to))};
    }

    require_keys(payload, {"p", "p_prime"});
    const ExtClass p = ext_class_from_json(payload["p"], params);
    const ExtClass p_prime = ext_class_from_json(payload["p_prime"], params);

    if (verb == "isom") {
        const std::optional<GroupElem> witness = isom_decide(p, p_prime);
        return {{{"isomorphic", witness.has_value()}, {"witness", witness ? to_json(*witness) : Json(nullptr)}}};
    }
    if (verb == "dims") {
        const HomProfile profile = hom_ext_dims(p, p_prime);
        Json out = to_json(profile);
        if (opt.cross_check) {
            const long brute = brute_force_hom(p, p_prime, opt.degree).dim;
            out["brute_force_dim"] = brute;
            if (brute != profile.dim_hom)
                return {out, kExitConsistency};
        }
        return {out};
    }
    if (verb == "bruteforce") {
        const BruteForceResult result = brute_force_hom(p, p_prime, opt.degree);
        Json out = {{"degree", result.degree}, {"dim", result.dim}};
        if (opt.with_basis) {
            Json basis = Json::array();
            for (const auto& pair : result.basis)
                basis.push_back(to_json(pair));
            out["basis"] = basis;
        }
        return {out};
    }
    throw InvalidInput("unknown verb '" + verb + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Extension classes, bundle isomorphisms and Hom/Ext dimensions on neighbourhoods of a (-k)-curve", "zkn"};
    app.require_subcommand(1, 1);

    struct Verb {
        const char* name;
        const char* help;
        bool moduli;
        bool payload;
    };
    const Verb verbs[] = {
        {"basis", "index set of the extension space W", true, false},
        {"reduce", "normal form of a cocycle (payload: RingElem)", true, true},
        {"act", "g.p (payload: {\"g\", \"p\"})", true, true},
        {"compose", "g1 ._p g2 (payload: {\"g1\", \"g2\", \"p\"})", true, true},
        {"invert-g", "inverse of g at p (payload: {\"g\", \"p\"})", true, true},
        {"isom", "decide E_p ~ E_p' (payload: {\"p\", \"p_prime\"})", true, true},
        {"dims", "Hom/Ext^1 dimensions (payload: {\"p\", \"p_prime\"})", true, true},
        {"bruteforce", "Hom dimension by direct linear algebra (payload: {\"p\", \"p_prime\"})", true, true},
        {"check-axioms", "seeded exact check of the groupoid identities", true, false},
        {"cohomology", "H^0 and H^1 of O(s)", false, false},
        {"cone-check", "relations of the cone of global functions", false, false},
        {"restrict", "image at a smaller modulus (payload: ExtClass or GroupElem)", true, true},
    };
    for (const Verb& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        if (v.moduli)
            add_moduli_flags(sub, opt);
        else
            add_ring_flags(sub, opt);
        if (v.payload)
            add_payload_flag(sub, opt);
        sub->add_option("--output", opt.output, "write the result here instead of standard output");
    }
    for (const char* name : {"check-axioms"}) {
        app.get_subcommand(name)->add_option("--samples", opt.samples, "number of seeded samples")->capture_default_str();
        app.get_subcommand(name)->add_option("--seed", opt.seed, "seed of the sample stream")->capture_default_str();
    }
    app.get_subcommand("cohomology")->add_option("--s", opt.twist, "twist s of O(s)");
    app.get_subcommand("restrict")->add_option("--to", opt.to, "target modulus m'");
    app.get_subcommand("bruteforce")->add_option("--degree", opt.degree, "z-degree bound D");
    app.get_subcommand("bruteforce")->add_flag("--with-basis", opt.with_basis, "also print a basis of cocycle pairs");
    app.get_subcommand("dims")->add_flag("--cross-check", opt.cross_check, "compare against the brute-force count");
    app.get_subcommand("dims")->add_option("--degree", opt.degree, "z-degree bound for --cross-check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    Outcome outcome;
    try {
        outcome = run_verb(verb, opt, in);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ConsistencyFailure& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitConsistency;
    }

    const std::string text = outcome.value.dump() + "\n";
    if (opt.output.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.output, std::ios::binary);
        if (!(file << text)) {
            err << "error: cannot write '" << opt.output << "'\n";
            return kExitInvalidInput;
        }
    }
    if (outcome.code == kExitConsistency)
        err << "internal consistency failure: check failed\n";
    return outcome.code;
}

}  // namespace zkn
