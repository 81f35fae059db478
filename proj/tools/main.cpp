// main.cpp
// goldbach-ap: prime arithmetic progressions, Goldbach partitions, and the
// correspondence between them.
//
// Exit codes: 0 success, 1 domain error (reported as one JSON line on
// stderr), 2 command line usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"

#include "goldbach/checked.hpp"
#include "goldbach/correspondence.hpp"
#include "goldbach/errors.hpp"
#include "goldbach/format.hpp"
#include "goldbach/partition.hpp"
#include "goldbach/prime_ap.hpp"
#include "goldbach/sieve.hpp"

namespace {

struct Cli {
    std::string format = "json";
    uint64_t sieve_limit = 10'000'000;
    unsigned threads = 1;

    uint64_t m = 0;
    uint64_t max = 0;
    uint64_t length = 0;
    uint64_t max_first = 0;
    uint64_t max_diff = 0;
    uint64_t first = 0;
    uint64_t diff = 0;
    int64_t a = 0;
    uint64_t d = 0;
    bool verify = false;
    std::string out_path;
    std::optional<uint64_t> keep_min;
    std::optional<uint64_t> keep_max;
};

// Write through a temp file in the same directory so readers never see a
// partial file; rename is atomic on POSIX.
void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) {
        std::remove(tmp.c_str());
        throw std::runtime_error("write to " + tmp + " failed");
    }
    out.close();
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move " + tmp + " to " + path);
    }
}

int fail(const std::string& error_class, const std::string& message) {
    std::cerr << goldbach::format_error(error_class, message);
    return 1;
}

int dispatch(const CLI::App& app, const Cli& cli) {
    const goldbach::OutputFormat fmt =
        cli.format == "csv" ? goldbach::OutputFormat::csv : goldbach::OutputFormat::json;

    auto make_sieve = [&cli](uint64_t needed) {
        if (needed > cli.sieve_limit)
            throw std::out_of_range("request needs primes up to " + std::to_string(needed) +
                                    ", beyond the sieve limit " +
                                    std::to_string(cli.sieve_limit) +
                                    "; raise --sieve-limit");
        goldbach::SieveConfig cfg;
        cfg.threads = cli.threads;
        return goldbach::PrimeSieve(cli.sieve_limit, cfg);
    };

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (name == "partitions") {
        const auto sieve = make_sieve(cli.m);
        std::cout << goldbach::format_solution_set(goldbach::solution_set(sieve, cli.m), fmt);
    } else if (name == "comet") {
        const auto sieve = make_sieve(cli.max);
        const auto series = goldbach::comet(sieve, cli.max, cli.threads);
        const std::string text = goldbach::format_comet(series, fmt);
        if (cli.out_path.empty())
            std::cout << text;
        else
            write_atomic(cli.out_path, text);
    } else if (name == "champions") {
        const auto sieve = make_sieve(cli.max);
        std::cout << goldbach::format_champions(
            goldbach::champions(sieve, cli.max, cli.threads), fmt);
    } else if (name == "find-ap") {
        if (cli.length < 3)
            throw std::invalid_argument("progression search needs length >= 3, got " +
                                        std::to_string(cli.length));
        const uint64_t needed = goldbach::checked_add(
            cli.max_first, goldbach::checked_mul(cli.max_diff, cli.length - 1));
        const auto sieve = make_sieve(needed);
        std::cout << goldbach::format_aps(
            goldbach::find_prime_aps(sieve, cli.length, cli.max_first, cli.max_diff), fmt);
    } else if (name == "ap2even") {
        const goldbach::PrimeAp ap(cli.first, cli.diff, cli.length);
        const auto part = goldbach::ap_to_even(ap);
        std::optional<goldbach::MembershipReport> membership;
        if (cli.verify) {
            const auto sieve = make_sieve(part.m);
            membership = goldbach::verify_membership(sieve, ap);
        }
        std::cout << goldbach::format_ap_partition(part, membership, fmt);
    } else if (name == "reconstruct") {
        const auto sieve = make_sieve(cli.m);
        goldbach::PrimeFilter keep = [](uint64_t) { return true; };
        if (cli.keep_min || cli.keep_max) {
            const uint64_t lo = cli.keep_min.value_or(0);
            const uint64_t hi = cli.keep_max.value_or(std::numeric_limits<uint64_t>::max());
            keep = [lo, hi](uint64_t p) { return lo <= p && p <= hi; };
        }
        const auto profile = goldbach::difference_profile(sieve, cli.m, keep);
        const auto ap = goldbach::reconstruct_ap(sieve, cli.m, keep);
        std::cout << goldbach::format_reconstruction(cli.m, profile, ap, fmt);
    } else if (name == "class-count") {
        const auto sieve = make_sieve(cli.max);
        const uint64_t count = sieve.count_primes_in_class(cli.a, cli.d, cli.max);
        std::cout << goldbach::format_class_count(cli.a, cli.d, cli.max, count, fmt);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime arithmetic progressions and Goldbach partitions"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--format", cli.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--sieve-limit", cli.sieve_limit,
                   "Upper bound of the prime sieve")
        ->envname("GOLDBACH_SIEVE_LIMIT")
        ->capture_default_str();
    app.add_option("--threads", cli.threads, "Worker threads, 0 = all hardware threads")
        ->capture_default_str();

    CLI::App* partitions =
        app.add_subcommand("partitions", "Goldbach solution set of an even number");
    partitions->fallthrough();
    partitions->add_option("m", cli.m, "Even number >= 4")->required();

    CLI::App* comet = app.add_subcommand("comet", "Partition counts for all even m up to a bound");
    comet->fallthrough();
    comet->add_option("--max", cli.max, "Largest even m, inclusive")->required();
    comet->add_option("--out", cli.out_path, "Write to this file instead of stdout");

    CLI::App* champions =
        app.add_subcommand("champions", "Record-setting partition counts up to a bound");
    champions->fallthrough();
    champions->add_option("--max", cli.max, "Largest even m, inclusive")->required();

    CLI::App* find_ap =
        app.add_subcommand("find-ap", "Enumerate prime progressions of a fixed length");
    find_ap->fallthrough();
    find_ap->add_option("--length", cli.length, "Progression length, >= 3")->required();
    find_ap->add_option("--max-first", cli.max_first, "Largest first term")->required();
    find_ap->add_option("--max-diff", cli.max_diff, "Largest common difference")->required();

    CLI::App* ap2even = app.add_subcommand(
        "ap2even", "Fold a prime progression into Goldbach pairs of one even number");
    ap2even->fallthrough();
    ap2even->add_option("--first", cli.first, "First term")->required();
    ap2even->add_option("--diff", cli.diff, "Common difference")->required();
    ap2even->add_option("--length", cli.length, "Progression length, >= 3")->required();
    ap2even->add_flag("--verify", cli.verify,
                      "Check every term against the full solution set");

    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "Rebuild a covering progression from the solution primes of m");
    reconstruct->fallthrough();
    reconstruct->add_option("--m", cli.m, "Even number >= 4")->required();
    reconstruct->add_option("--keep-min", cli.keep_min, "Drop solution primes below this");
    reconstruct->add_option("--keep-max", cli.keep_max, "Drop solution primes above this");

    CLI::App* class_count = app.add_subcommand(
        "class-count", "Count primes in the residue class a mod d up to a bound");
    class_count->fallthrough();
    class_count->add_option("--a", cli.a, "Residue, may be negative")->required();
    class_count->add_option("--d", cli.d, "Modulus")->required();
    class_count->add_option("--max", cli.max, "Count primes up to this bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, cli);
    } catch (const goldbach::resource_limit_error& e) {
        return fail("resource-limit", e.what());
    } catch (const goldbach::insufficient_partitions_error& e) {
        return fail("insufficient-partitions", e.what());
    } catch (const goldbach::invalid_filter_error& e) {
        return fail("invalid-filter", e.what());
    } catch (const goldbach::degenerate_input_error& e) {
        return fail("degenerate-input", e.what());
    } catch (const std::overflow_error& e) {
        return fail("overflow", e.what());
    } catch (const std::out_of_range& e) {
        return fail("out-of-range", e.what());
    } catch (const std::invalid_argument& e) {
        return fail("invalid-argument", e.what());
    } catch (const std::domain_error& e) {
        return fail("domain-error", e.what());
    } catch (const std::exception& e) {
        return fail("error", e.what());
    }
}
