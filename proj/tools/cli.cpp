#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verify.hpp"
#include "zsw/errors.hpp"
#include "zsw/serialize.hpp"

namespace zsw::cli {

namespace {

struct Common {
    std::optional<std::int64_t> cap;
    unsigned workers = 1;
    std::uint64_t budget = 0;
    std::string log;
    bool pretty = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ParseError(std::string("bad ") + what + " list '" + text + "'", pos);
        out.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

SearchOptions search_options(const Common& c) {
    SearchOptions o;
    o.cap = c.cap;
    if (!o.cap)
        if (const char* env = std::getenv("ZS_CAP")) {
            std::int64_t v = 0;
            const std::string_view s(env);
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
                throw UsageError("ZS_CAP must be a positive integer");
            o.cap = v;
        }
    o.workers = c.workers;
    o.node_budget = c.budget;
    return o;
}

void add_common(CLI::App* app, Common& c, bool search) {
    if (search) {
        app->add_option("--cap", c.cap, "longest sequence examined (default 3*m*|G|, or $ZS_CAP)")
            ->check(CLI::PositiveNumber);
        app->add_option("--workers", c.workers, "parallel search workers")->check(CLI::Range(1u, 256u));
        app->add_option("--budget", c.budget, "node budget per search (0 = unlimited)");
    }
    app->add_option("--log", c.log, "append a JSON-lines run record to this file");
    app->add_flag("--pretty", c.pretty, "indented JSON");
    app->add_flag("--json", "single-line JSON (default)");
}

class Session {
public:
    Session(std::ostream& out, const Common& common, std::vector<std::string> args)
        : out_(out), common_(common), args_(std::move(args)), start_(std::chrono::steady_clock::now()) {}

    void emit(const std::string& command, const Json& result, std::uint64_t nodes = 0) {
        out_ << (common_.pretty ? result.dump(2) : result.dump()) << '\n';
        if (common_.log.empty())
            return;
        Json record;
        record["schema_version"] = kSchemaVersion;
        record["version"] = kVersion;
        record["command"] = command;
        record["arguments"] = args_;
        record["result"] = result;
        record["nodes"] = nodes;
        record["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::ofstream log(common_.log, std::ios::app);
        if (!log)
            throw UsageError("cannot append to log '" + common_.log + "'");
        log << record.dump() << '\n';
    }

private:
    std::ostream& out_;
    const Common& common_;
    std::vector<std::string> args_;
    std::chrono::steady_clock::time_point start_;
};

int cmd_compute(Session& s, const Common& c, const std::string& group_text, const std::string& invariant,
                int m, const std::string& lengths_text) {
    const auto group = parse_group(group_text);
    const auto opt = search_options(c);
    if (m < 1)
        throw UsageError("--m must be at least 1");
    InvariantResult r;
    if (invariant == "D" || invariant == "d")
        r = davenport(group, opt);
    else if (invariant == "E")
        r = e_constant(group, opt);
    else if (invariant == "Em")
        r = e_m(group, m, opt);
    else if (invariant == "eta")
        r = eta(group, opt);
    else if (invariant == "s")
        r = s_egz(group, opt);
    else if (invariant == "sm")
        r = s_m(group, m, opt);
    else if (invariant == "Dm")
        r = d_m(group, m, opt);
    else if (invariant == "sIm") {
        if (lengths_text.empty())
            throw UsageError("sIm needs --I <length set>");
        r = s_invariant(group, LengthSet::parse(lengths_text), m, opt);
    } else
        throw UsageError("unknown invariant '" + invariant + "' (D, d, E, Em, eta, s, sm, Dm, sIm)");

    Json out;
    out["invariant"] = invariant;
    out.update(to_json(r));
    if (invariant == "d" && r.exact())
        out["value"] = r.value - 1;
    s.emit("compute", out, r.nodes);
    return r.exact() ? kExitOk : kExitCapExceeded;
}

int cmd_bounds(Session& s, const std::string& group_text) {
    s.emit("bounds", bounds_report(parse_group(group_text)));
    return kExitOk;
}

int cmd_kemnitz(Session& s, std::int64_t n, std::int64_t m, const std::string& path) {
    const auto points = read_points(read_file(path));
    const auto partition = find_centroid_subsets(points, n, m);
    Json out;
    out["n"] = n;
    out["m"] = m;
    out["points"] = points.size();
    out.update(to_json(partition));
    out["verified"] = verify_partition(points, n, partition);
    s.emit("kemnitz", out);
    return kExitOk;
}

int cmd_smooth(Session& s, const std::string& basis_text, const std::string& moduli_text, const std::string& path) {
    const PrimeBasis basis(parse_list(basis_text, "basis"));
    const auto moduli = parse_list(moduli_text, "moduli");
    const auto numbers = read_numbers(read_file(path));
    const auto cert = find_power_smooth_subsequence(numbers, basis, moduli);
    Json out;
    if (cert) {
        out = to_json(*cert);
        out["verified"] = cert->verify(numbers, basis, moduli);
    } else {
        out["result"] = "none";
    }
    s.emit("smooth", out);
    return kExitOk;
}

int cmd_nonabelian(Session& s, const Common& c, const std::string& name, const std::string& table,
                   const std::string& invariant, std::int64_t m) {
    if (name.empty() == table.empty())
        throw UsageError("nonabelian needs exactly one of <group> or --table");
    const auto group = table.empty() ? CayleyGroup::builtin(name) : CayleyGroup::parse(read_file(table));
    const auto opt = search_options(c);
    Json out;
    out["group"] = group.name();
    out["order"] = group.order();
    out["invariant"] = invariant;
    if (invariant == "d") {
        auto r = s_invariant_na(group, LengthSet::all(), opt);
        out.update(to_json(r));
        if (r.exact())
            out["value"] = r.value - 1;
        s.emit("nonabelian", out, r.nodes);
        return r.exact() ? kExitOk : kExitCapExceeded;
    }
    if (invariant == "E") {
        auto r = e_constant_na(group, opt);
        out.update(to_json(r));
        s.emit("nonabelian", out, r.nodes);
        return r.exact() ? kExitOk : kExitCapExceeded;
    }
    if (invariant == "sandwich") {
        if (m < 1)
            throw UsageError("--m must be at least 1");
        out["m"] = m;
        out.update(to_json(e_m_sandwich(group, m, opt)));
        s.emit("nonabelian", out);
        return kExitOk;
    }
    throw UsageError("unknown non-abelian invariant '" + invariant + "' (d, E, sandwich)");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact zero-sum invariants of finite abelian groups", "zsw"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common common;

    std::string group_text, invariant, lengths_text;
    int m = 1;
    auto* compute = app.add_subcommand("compute", "compute an invariant by exhaustive search");
    compute->add_option("group", group_text, "group literal, e.g. C2xC4")->required();
    compute->add_option("invariant", invariant, "D, d, E, Em, eta, s, sm, Dm or sIm")->required();
    compute->add_option("--m", m, "multiplicity m");
    compute->add_option("--I", lengths_text, "length set for sIm: all, <=k, =k, >=k, [a,b], unions with ','");
    add_common(compute, common, true);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", vopt.suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
    verify->add_option("--max-order", vopt.max_order, "largest group order swept");
    verify->add_option("--m-max", vopt.m_max, "largest multiplicity");
    verify->add_option("--pairs", vopt.pairs, "lemma69 pairs: builtin or all")
        ->check(CLI::IsMember({"builtin", "all"}));
    verify->add_option("--budget", vopt.budget, "node budget per search; exhausted cases are skipped");
    verify->add_option("--workers", vopt.workers, "parallel search workers")->check(CLI::Range(1u, 256u));
    verify->add_option("--log", common.log, "append a JSON-lines run record to this file");

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds for a group");
    bounds->add_option("group", group_text, "group literal")->required();
    add_common(bounds, common, false);

    std::int64_t kn = 0, km = 0;
    std::string points_path;
    auto* kemnitz = app.add_subcommand("kemnitz", "disjoint n-subsets of lattice points with lattice centroids");
    kemnitz->add_option("--n", kn, "subset size")->required();
    kemnitz->add_option("--m", km, "number of subsets")->required();
    kemnitz->add_option("--points", points_path, "file with one \"x y\" pair per line")->required();
    add_common(kemnitz, common, false);

    std::string basis_text, moduli_text, numbers_path;
    auto* smooth = app.add_subcommand("smooth", "subsequence whose product is a product of p_k^{n_k} powers");
    smooth->add_option("--basis", basis_text, "primes, e.g. 2,3")->required();
    smooth->add_option("--moduli", moduli_text, "moduli n_k, e.g. 2,2")->required();
    smooth->add_option("--numbers", numbers_path, "file with one integer per line")->required();
    add_common(smooth, common, false);

    std::string na_name, na_table, na_invariant = "d";
    std::int64_t na_m = 1;
    auto* nonabelian = app.add_subcommand("nonabelian", "small Davenport constant and E(G) of a Cayley-table group");
    nonabelian->add_option("group", na_name, "S3, Q8, D<2n>, C<n> or an abelian literal");
    nonabelian->add_option("--table", na_table, "Cayley table file");
    nonabelian->add_option("--invariant", na_invariant, "d, E or sandwich");
    nonabelian->add_option("--m", na_m, "multiplicity for the sandwich");
    add_common(nonabelian, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    Session session(out, common, args);
    try {
        if (*compute)
            return cmd_compute(session, common, group_text, invariant, m, lengths_text);
        if (*bounds)
            return cmd_bounds(session, group_text);
        if (*kemnitz)
            return cmd_kemnitz(session, kn, km, points_path);
        if (*smooth)
            return cmd_smooth(session, basis_text, moduli_text, numbers_path);
        if (*nonabelian)
            return cmd_nonabelian(session, common, na_name, na_table, na_invariant, na_m);
        if (*verify) {
            const auto summary = run_verify(vopt, out);
            Json result;
            result["suite"] = vopt.suite;
            result["passed"] = summary.passed;
            result["failed"] = summary.failed;
            result["skipped"] = summary.skipped;
            if (!common.log.empty()) {
                std::ostringstream sink;
                Session quiet(sink, common, args);
                quiet.emit("verify", result);
            }
            return summary.failed ? kExitVerifyFailed : kExitOk;
        }
    } catch (const UsageError& e) {
        err << "zsw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "zsw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotSmooth& e) {
        err << "zsw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisError& e) {
        err << "zsw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "zsw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetError& e) {
        err << "zsw: " << e.what() << '\n';
        return kExitCapExceeded;
    }
    return kExitUsage;
}

} // namespace zsw::cli
