#include "zetacomp/cli.hpp"

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "zetacomp/errors.hpp"
#include "zetacomp/generators.hpp"
#include "zetacomp/incidence.hpp"
#include "zetacomp/poset_io.hpp"

namespace zetacomp::cli {

using nlohmann::ordered_json;

namespace {

/* Generated relation tables are dense; keep desk-scale sizes. */
constexpr int kMaxGeneratedN = 512;

struct LoadedPoset {
    Poset poset;
    std::string name;        // file path or generator spec
    bool from_random = false; // record the rng identifier in machine output
};

long long parse_param(const std::string& spec, const std::string& text)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("generator spec '" + spec + "': bad numeric parameter '" + text + "'");
    }
}

void check_generated_size(long long n, const std::string& spec)
{
    if (n > kMaxGeneratedN)
        throw SizeGuardError("generator spec '" + spec + "': n=" + std::to_string(n) +
                             " exceeds the CLI cap of " + std::to_string(kMaxGeneratedN));
}

LoadedPoset load_from_gen(const std::string& spec, const RunConfig& config)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon + 1 == spec.size())
        throw ParseError("generator spec '" + spec + "' must look like name:param");
    const std::string kind = spec.substr(0, colon);
    const long long param = parse_param(spec, spec.substr(colon + 1));

    LoadedPoset loaded;
    loaded.name = spec;
    if (kind == "chain") {
        check_generated_size(param, spec);
        loaded.poset = chain(static_cast<int>(param));
    } else if (kind == "antichain") {
        check_generated_size(param, spec);
        loaded.poset = antichain(static_cast<int>(param));
    } else if (kind == "boolean") {
        if (param >= 0)
            check_generated_size(param <= 62 ? (1LL << param) : std::numeric_limits<long long>::max(), spec);
        loaded.poset = boolean_lattice(static_cast<int>(param));
    } else if (kind == "divisor") {
        loaded.poset = divisor_poset(param);
    } else if (kind == "random") {
        check_generated_size(param, spec);
        loaded.poset = random_poset(static_cast<int>(param), config.density, config.seed);
        loaded.from_random = true;
    } else {
        throw ParseError("unknown generator '" + kind + "' (expected chain, antichain, boolean, divisor, random)");
    }
    return loaded;
}

LoadedPoset load_input(const RunConfig& config)
{
    const bool has_file = !config.input_file.empty();
    const bool has_gen = !config.gen_spec.empty();
    if (has_file == has_gen)
        throw ParseError("exactly one input source is required: --in FILE or --gen SPEC");

    if (has_gen)
        return load_from_gen(config.gen_spec, config);

    LoadedPoset loaded;
    loaded.name = config.input_file;
    loaded.poset = build(load_poset_file(config.input_file));
    return loaded;
}

ordered_json poset_header(const LoadedPoset& input)
{
    ordered_json poset{{"n", input.poset.size()}, {"name", input.name}};
    return poset;
}

ordered_json generator_info(const LoadedPoset& input, const RunConfig& config)
{
    ordered_json gen{{"spec", input.name}};
    if (input.from_random) {
        gen["seed"] = config.seed;
        gen["density"] = config.density;
        gen["rng"] = kRngId;
    }
    return gen;
}

ordered_json matrix_to_json(const IntMatrix& m)
{
    auto rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json poly_to_json(const IntPolynomial& p)
{
    auto coeffs = ordered_json::array();
    for (const Int& c : p.coefficients())
        coeffs.push_back(c.get_str());
    return coeffs;
}

std::string counts_line(const std::vector<Int>& counts)
{
    std::string out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k > 0)
            out += ' ';
        out += counts[k].get_str();
    }
    return out;
}

void print_matrix(std::ostream& out, const std::string& heading, const IntMatrix& m)
{
    out << heading << ":\n";
    if (m.rows() == 0) {
        out << "(0x0)\n";
        return;
    }
    out << to_string(m);
}

int run_info(const RunConfig& config, std::ostream& out)
{
    const LoadedPoset input = load_input(config);
    const Poset& p = input.poset;

    const ChainCensus census = chain_counts(p);
    const Int chi = euler_char_chains(p);
    const Int det = det_complement_direct(p);
    const auto max = find_maximum(p);
    const auto min = find_minimum(p);

    if (config.format == Format::machine) {
        ordered_json doc;
        doc["command"] = "info";
        doc["poset"] = poset_header(input);
        doc["generator"] = config.gen_spec.empty() ? ordered_json(nullptr) : generator_info(input, config);
        doc["names"] = p.names();
        doc["maximum"] = max ? ordered_json(p.name(*max)) : ordered_json(nullptr);
        doc["minimum"] = min ? ordered_json(p.name(*min)) : ordered_json(nullptr);
        auto counts = ordered_json::array();
        for (const Int& c : census.counts)
            counts.push_back(c.get_str());
        doc["chain_counts"] = std::move(counts);
        doc["chi"] = chi.get_str();
        doc["chi_reduced"] = Int(chi - 1).get_str();
        doc["det_complement"] = det.get_str();
        out << doc.dump() << '\n';
        return kExitOk;
    }

    out << "poset: " << input.name << "\n";
    out << "n: " << p.size() << "\n";
    out << "names:";
    for (const auto& name : p.names())
        out << ' ' << name;
    out << "\n";
    out << "maximum: " << (max ? p.name(*max) : "(none)") << "\n";
    out << "minimum: " << (min ? p.name(*min) : "(none)") << "\n";
    out << "c_k: " << counts_line(census.counts) << "\n";
    out << "\xcf\x87: " << chi.get_str() << "\n";                    // chi
    out << "\xcf\x87\xcc\x83: " << Int(chi - 1).get_str() << "\n";   // chi-tilde
    out << "det Z\xcc\x84: " << det.get_str() << "\n";               // Z-bar
    return kExitOk;
}

int run_matrices(const RunConfig& config, std::ostream& out)
{
    LoadedPoset input = load_input(config);
    if (config.relabel)
        input.poset = relabel(input.poset, linear_extension(input.poset));
    const Poset& p = input.poset;

    const IntMatrix zeta = zeta_matrix(p);
    const IntMatrix complement = complement_matrix(p);
    const IntMatrix strict = strict_matrix(p);
    const IntMatrix mobius = mobius_matrix(p);
    const Int mobius_sum = mobius.sum();

    if (config.format == Format::machine) {
        ordered_json doc;
        doc["command"] = "matrices";
        doc["poset"] = poset_header(input);
        doc["relabeled"] = config.relabel;
        doc["names"] = p.names();
        doc["zeta"] = matrix_to_json(zeta);
        doc["complement"] = matrix_to_json(complement);
        doc["strict"] = matrix_to_json(strict);
        doc["mobius"] = matrix_to_json(mobius);
        doc["mobius_sum"] = mobius_sum.get_str();
        doc["chi"] = euler_char_chains(p).get_str();
        out << doc.dump() << '\n';
        return kExitOk;
    }

    out << "poset: " << input.name << (config.relabel ? " (relabeled by linear extension)" : "") << "\n";
    print_matrix(out, "Z", zeta);
    print_matrix(out, "Z\xcc\x84", complement);
    print_matrix(out, "N", strict);
    print_matrix(out, "M\xc3\xb6" "bius", mobius);
    out << "\xce\xa3 M\xc3\xb6" "bius entries = \xcf\x87: " << mobius_sum.get_str() << "\n";
    return kExitOk;
}

int run_charpoly(const RunConfig& config, std::ostream& out)
{
    const LoadedPoset input = load_input(config);
    const Poset& p = input.poset;

    const IntPolynomial formula = charpoly_formula(p);
    const IntPolynomial direct = charpoly(complement_matrix(p));
    const bool equal = formula == direct;

    if (config.format == Format::machine) {
        ordered_json doc;
        doc["command"] = "charpoly";
        doc["poset"] = poset_header(input);
        doc["formula"] = poly_to_json(formula);
        doc["division_free"] = poly_to_json(direct);
        doc["equal"] = equal;
        out << doc.dump() << '\n';
    } else {
        out << "poset: " << input.name << "\n";
        out << "chain-count formula: " << coeff_string(formula) << "  |  " << lambda_string(formula)
            << "\n";
        out << "division-free:       " << coeff_string(direct) << "  |  " << lambda_string(direct)
            << "\n";
        out << "equal: " << (equal ? "yes" : "NO — implementation defect, the identity is a theorem")
            << "\n";
    }
    return equal ? kExitOk : kExitIdentityFailure;
}

void print_report_plain(std::ostream& out, const VerificationReport& report)
{
    out << "poset: " << report.poset_name << " (n=" << report.n << ")\n";
    out << "\xcf\x87: " << report.chi.get_str() << "  \xcf\x87\xcc\x83: " << report.chi_reduced.get_str()
        << "  det Z\xcc\x84: " << report.det_complement.get_str() << "\n";
    for (const auto& rec : report.identities) {
        out << (rec.pass ? "  pass  " : "  FAIL  ") << rec.name;
        if (!rec.pass)
            out << "  lhs=" << rec.lhs << "  rhs=" << rec.rhs;
        out << "\n";
    }
    out << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
    if (report.failed() > 0)
        out << "an identity failed: these are proved theorems, so this is an implementation defect\n";
}

int run_verify(const RunConfig& config, std::ostream& out)
{
    const LoadedPoset input = load_input(config);
    const VerificationReport report = verify_theorem(input.poset, config.size_guard, input.name);

    if (config.format == Format::machine)
        out << report_to_json(report).dump() << '\n';
    else
        print_report_plain(out, report);
    return report.all_pass() ? kExitOk : kExitIdentityFailure;
}

int run_sweep(const RunConfig& config, std::ostream& out)
{
    const bool random_kind = config.sweep_kind == SweepKind::random;
    const int n = config.sweep_n >= 0 ? config.sweep_n : (random_kind ? 10 : 4);

    std::vector<Poset> posets;
    std::vector<std::string> names;
    if (random_kind) {
        if (config.count < 0)
            throw ParseError("sweep: count must be nonnegative");
        check_generated_size(n, "random sweep");
        posets.reserve(static_cast<std::size_t>(config.count));
        for (int i = 0; i < config.count; ++i) {
            posets.push_back(random_poset(n, config.density, config.seed + static_cast<std::uint64_t>(i)));
            names.push_back("random:" + std::to_string(n) + ":seed=" +
                            std::to_string(config.seed + static_cast<std::uint64_t>(i)));
        }
    } else {
        posets = all_labeled_posets(n); // throws SizeGuardError past the guard
        names.reserve(posets.size());
        for (std::size_t i = 0; i < posets.size(); ++i)
            names.push_back("labeled:" + std::to_string(n) + ":#" + std::to_string(i));
    }

    // Per-poset verification is pure; fan out and aggregate by index so the
    // output is identical however many threads run.
    std::vector<VerificationReport> reports(posets.size());
    const std::int64_t total = static_cast<std::int64_t>(posets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i)
        reports[static_cast<std::size_t>(i)] =
            verify_theorem(posets[static_cast<std::size_t>(i)], config.size_guard,
                           names[static_cast<std::size_t>(i)]);

    long identities = 0, failed_identities = 0, failed_posets = 0;
    for (const auto& report : reports) {
        identities += static_cast<long>(report.identities.size());
        failed_identities += report.failed();
        if (!report.all_pass())
            ++failed_posets;
    }

    if (config.format == Format::machine) {
        for (const auto& report : reports)
            out << report_to_json(report).dump() << '\n';
        ordered_json summary;
        summary["command"] = "sweep";
        summary["kind"] = random_kind ? "random" : "exhaustive";
        summary["n"] = n;
        if (random_kind) {
            summary["count"] = config.count;
            summary["seed"] = config.seed;
            summary["density"] = config.density;
            summary["rng"] = kRngId;
        }
        summary["posets"] = reports.size();
        summary["identities"] = identities;
        summary["passed"] = identities - failed_identities;
        summary["failed"] = failed_identities;
        out << summary.dump() << '\n';
    } else {
        for (const auto& report : reports)
            if (!report.all_pass()) {
                out << "FAILED ";
                print_report_plain(out, report);
            }
        out << "sweep " << (random_kind ? "random" : "exhaustive") << " n=" << n << ": " << reports.size()
            << " posets, " << identities << " identities, ";
        if (failed_identities == 0)
            out << "all pass\n";
        else
            out << failed_identities << " FAILED on " << failed_posets
                << " posets (implementation defect: the identities are theorems)\n";
    }
    return failed_identities == 0 ? kExitOk : kExitIdentityFailure;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::info:
            return run_info(config, out);
        case Command::matrices:
            return run_matrices(config, out);
        case Command::charpoly:
            return run_charpoly(config, out);
        case Command::verify:
            return run_verify(config, out);
        case Command::sweep:
            return run_sweep(config, out);
        }
        err << "error: unknown command\n";
        return kExitUsage;
    } catch (const PosetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace zetacomp::cli
