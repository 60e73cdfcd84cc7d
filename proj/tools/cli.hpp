#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mostar/mostar.hpp"

namespace mostar::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Tree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return read_edge_list(in);
}

/// Writes to `path`, or to `fallback` when path is empty.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw UsageError("cannot write '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    for (int v : mostar::detail::parse_int_list(text, ',', "vertex list")) {
        if (v < 0)
            throw UsageError("vertex ids must be non-negative");
        out.push_back(Vertex(v));
    }
    return out;
}

} // namespace detail

/// Runs the `mostar` command line. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mostar index of trees: compute, build families, enumerate, transform, verify"};
    app.require_subcommand(1);
    app.allow_extras(false);

    // compute
    auto* compute = app.add_subcommand("compute", "Mostar index and per-edge contributions of a tree file");
    std::string compute_file;
    std::string compute_format = "text";
    bool compute_oracle = false;
    compute->add_option("file", compute_file, "edge-list file")->required();
    compute->add_option("--format", compute_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    compute->add_flag("--oracle", compute_oracle, "use the quadratic distance-based definition");

    // family
    auto* family = app.add_subcommand("family", "Build a named tree family, e.g. C:n=7,a=1,b=1");
    std::string family_spec;
    std::string family_format = "edgelist";
    std::string family_out;
    family->add_option("spec", family_spec, "family spec")->required();
    family->add_option("--format", family_format, "edgelist, dot or json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    family->add_option("--out", family_out, "output path (default stdout)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Stream nonisomorphic trees as NDJSON");
    std::size_t enum_n = 0;
    std::vector<std::string> enum_filters;
    std::string enum_out;
    std::size_t enum_cap = default_enumeration_cap;
    enumerate->add_option("--n", enum_n, "tree order")->required();
    enumerate->add_option("--filter", enum_filters,
                          "class filter: odd=k, deg2=t, leaves=r, branch=k, ppath=k:r, ppath-max=k:r, "
                          "series-reduced, all-odd, degseq=d1,d2,..., none (repeatable, all must hold)");
    enumerate->add_option("--out", enum_out, "output path (default stdout)");
    enumerate->add_option("--cap", enum_cap, "largest order allowed");

    // transform
    auto* transform = app.add_subcommand("transform", "Apply a tree surgery and report the index change");
    std::string tr_name;
    std::string tr_in;
    std::string tr_family;
    std::string tr_out;
    std::optional<int> tr_u, tr_v, tr_l, tr_m, tr_x, tr_y, tr_i, tr_c, tr_head, tr_from, tr_to;
    std::string tr_path;
    transform->add_option("name", tr_name, "contract, rebalance, move-pendants, shift or relocate")
        ->required()
        ->check(CLI::IsMember({"contract", "rebalance", "move-pendants", "shift", "relocate"}));
    transform->add_option("--in", tr_in, "input edge-list file");
    transform->add_option("--family", tr_family, "input family spec instead of a file");
    transform->add_option("--out", tr_out, "write the resulting tree(s) as edge lists");
    transform->add_option("--u", tr_u, "vertex u (contract: edge end; rebalance: anchor)");
    transform->add_option("--v", tr_v, "vertex v (contract)");
    transform->add_option("--l", tr_l, "longer leg length (rebalance)");
    transform->add_option("--m", tr_m, "shorter leg length (rebalance)");
    transform->add_option("--x", tr_x, "first vertex (move-pendants)");
    transform->add_option("--y", tr_y, "second vertex (move-pendants)");
    transform->add_option("--path", tr_path, "comma-separated longest path (shift)");
    transform->add_option("--i", tr_i, "path index of the branch vertex (shift)");
    transform->add_option("--c", tr_c, "number of branches to move (shift)");
    transform->add_option("--head", tr_head, "first vertex of the moved pendent path (relocate)");
    transform->add_option("--from", tr_from, "current anchor (relocate)");
    transform->add_option("--to", tr_to, "new anchor (relocate)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check registered extremal claims by exhaustive search");
    std::string ver_claim;
    int ver_min = 5;
    int ver_max = 12;
    std::string ver_format = "text";
    std::string ver_out;
    std::string ver_reading = "census";
    unsigned ver_threads = 1;
    verify->add_option("--claim", ver_claim, "claim id or 'all'")->required();
    verify->add_option("--n-min", ver_min, "smallest order");
    verify->add_option("--n-max", ver_max, "largest order");
    verify->add_option("--format", ver_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", ver_out, "output path (default stdout)");
    verify->add_option("--reading", ver_reading, "pendent-path counting: census or maximal")
        ->check(CLI::IsMember({"census", "maximal"}));
    verify->add_option("--threads", ver_threads, "worker threads");

    // bench
    auto* bench = app.add_subcommand("bench", "Time the linear and the quadratic index computations");
    std::size_t bench_n = 100000;
    std::uint64_t bench_seed = 42;
    std::size_t bench_bfs_max = 5000;
    bench->add_option("--n", bench_n, "tree order")->required();
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--bfs-max", bench_bfs_max, "skip the quadratic path above this order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*compute) {
            const Tree t = detail::load_tree(compute_file);
            const auto result = compute_oracle ? mostar_bfs(t) : mostar_fast(t);
            if (compute_format == "json") {
                nlohmann::json edges = nlohmann::json::array();
                for (const auto& s : result.splits)
                    edges.push_back({{"u", s.edge.u}, {"v", s.edge.v}, {"n_u", s.n_u}, {"n_v", s.n_v}, {"psi", s.psi}});
                out << nlohmann::json{{"n", t.order()}, {"mo", result.total}, {"edges", edges}}.dump() << "\n";
            } else {
                out << "Mo = " << result.total << "\n";
                for (const auto& s : result.splits)
                    out << "psi(" << s.edge.u << "," << s.edge.v << ") = " << s.psi << "  [" << s.n_u << "|"
                        << s.n_v << "]\n";
            }
            return exit_ok;
        }

        if (*family) {
            const Tree t = build(parse_family(family_spec));
            detail::Sink sink(family_out, out);
            if (family_format == "dot")
                *sink << to_dot(t);
            else if (family_format == "json")
                *sink << to_json(t).dump() << "\n";
            else
                write_edge_list(*sink, t);
            return exit_ok;
        }

        if (*enumerate) {
            std::vector<ConstraintSpec> filters;
            for (const auto& f : enum_filters) {
                filters.push_back(parse_constraint(f));
                validate(enum_n, filters.back());
            }
            detail::Sink sink(enum_out, out);
            std::size_t emitted = 0;
            for_each_free_tree(
                enum_n,
                [&](const Tree& t, std::size_t index) {
                    if (!filters.empty()) {
                        if (t.order() < 2)
                            return;
                        const auto s = stats(t);
                        for (const auto& f : filters)
                            if (!satisfies(s, f))
                                return;
                    }
                    auto rec = to_json(t);
                    rec["index"] = index;
                    rec["mo"] = mostar_index(t);
                    *sink << rec.dump() << "\n";
                    ++emitted;
                },
                0, static_cast<std::size_t>(-1), enum_cap);
            err << emitted << " trees\n";
            return exit_ok;
        }

        if (*transform) {
            if (tr_in.empty() == tr_family.empty())
                throw UsageError("transform needs exactly one of --in or --family");
            const Tree t = tr_in.empty() ? build(parse_family(tr_family)) : detail::load_tree(tr_in);
            auto need = [&](const std::optional<int>& opt, const char* flag) {
                if (!opt)
                    throw UsageError(tr_name + " needs " + flag);
                if (*opt < 0)
                    throw UsageError(std::string(flag) + " must be non-negative");
                return *opt;
            };
            std::vector<TransformOutcome> outcomes;
            if (tr_name == "contract") {
                const auto u = Vertex(need(tr_u, "--u"));
                const auto v = Vertex(need(tr_v, "--v"));
                outcomes.push_back(make_outcome(t, contract_with_pendant(t, u, v)));
            } else if (tr_name == "rebalance") {
                const auto u = Vertex(need(tr_u, "--u"));
                outcomes.push_back(make_outcome(
                    t, rebalance_paths(t, u, std::size_t(need(tr_l, "--l")), std::size_t(need(tr_m, "--m")))));
            } else if (tr_name == "move-pendants") {
                auto [t1, t2] = move_pendants_to_path_neighbor(t, Vertex(need(tr_x, "--x")), Vertex(need(tr_y, "--y")));
                outcomes.push_back(make_outcome(t, std::move(t1)));
                outcomes.push_back(make_outcome(t, std::move(t2)));
            } else if (tr_name == "shift") {
                if (tr_path.empty())
                    throw UsageError("shift needs --path");
                const auto path = detail::parse_vertex_list(tr_path);
                outcomes.push_back(
                    shift_branch_to_end(t, path, std::size_t(need(tr_i, "--i")), std::size_t(need(tr_c, "--c"))));
            } else {
                outcomes.push_back(make_outcome(t, relocate_pendant(t, Vertex(need(tr_head, "--head")),
                                                                    Vertex(need(tr_from, "--from")),
                                                                    Vertex(need(tr_to, "--to")))));
            }
            out << "Mo before = " << outcomes.front().mo_before << "\n";
            for (std::size_t k = 0; k < outcomes.size(); ++k) {
                const auto& o = outcomes[k];
                out << "Mo after" << (outcomes.size() > 1 ? " (" + std::to_string(k + 1) + ")" : "") << " = "
                    << o.mo_after << "\n";
            }
            if (tr_name == "shift")
                out << "hypothesis held: " << (outcomes.front().hypothesis_held ? "yes" : "no") << "\n";
            if (!tr_out.empty()) {
                detail::Sink sink(tr_out, out);
                for (const auto& o : outcomes)
                    write_edge_list(*sink, o.after);
            }
            return exit_ok;
        }

        if (*verify) {
            std::vector<const TheoremClaim*> claims;
            if (ver_claim == "all") {
                for (const auto& c : theorem_registry())
                    claims.push_back(&c);
            } else if (const auto* c = find_claim(ver_claim)) {
                claims.push_back(c);
            } else {
                throw UsageError("unknown claim '" + ver_claim + "'");
            }
            if (ver_min > ver_max)
                throw UsageError("--n-min must not exceed --n-max");
            CheckOptions opt;
            opt.reading = ver_reading == "census" ? PathReading::census : PathReading::maximal;
            opt.threads = ver_threads;

            detail::Sink sink(ver_out, out);
            bool ok = true;
            nlohmann::json all = nlohmann::json::array();
            if (ver_format == "csv")
                *sink << csv_header();
            for (const auto* claim : claims) {
                const auto reports = check_claim(*claim, ver_min, ver_max, opt);
                ok = ok && all_hold(reports);
                if (ver_format == "json") {
                    all.push_back(reports_to_json(claim->id, reports));
                } else if (ver_format == "csv") {
                    for (const auto& r : reports)
                        *sink << to_csv_row(r);
                } else {
                    std::size_t failed = 0;
                    std::size_t unique = 0;
                    for (const auto& r : reports) {
                        failed += r.failed() ? 1 : 0;
                        unique += r.argopt_unique ? 1 : 0;
                        if (r.failed() || !r.valid_instance)
                            *sink << "  " << (r.valid_instance ? "FAIL" : "INVALID") << " n=" << r.n << " "
                                  << r.constraint << " " << to_string(r.direction) << " claimed=" << r.claimed_family
                                  << (r.valid_instance ? "" : " (" + r.invalid_reason + ")") << "\n";
                    }
                    *sink << (failed == 0 ? "PASS " : "FAIL ") << claim->id << ": " << reports.size()
                          << " instances, " << failed << " failed, " << unique << " with a unique optimum\n";
                }
            }
            if (ver_format == "json")
                *sink << (claims.size() == 1 ? all.front() : all).dump(2) << "\n";
            return ok ? exit_ok : exit_failed;
        }

        if (*bench) {
            if (bench_n < 2)
                throw UsageError("--n must be at least 2");
            const Tree t = random_tree(bench_n, bench_seed);
            using clock = std::chrono::steady_clock;
            const auto t0 = clock::now();
            const auto fast = mostar_fast(t);
            const auto t1 = clock::now();
            out << "n = " << bench_n << "\n";
            out << "Mo = " << fast.total << "\n";
            out << std::fixed << std::setprecision(3);
            out << "mostar_fast: " << std::chrono::duration<double, std::milli>(t1 - t0).count() << " ms\n";
            if (bench_n <= bench_bfs_max) {
                const auto t2 = clock::now();
                const auto slow = mostar_bfs(t);
                const auto t3 = clock::now();
                out << "mostar_bfs: " << std::chrono::duration<double, std::milli>(t3 - t2).count() << " ms\n";
                out << "agree: " << (slow == fast ? "yes" : "no") << "\n";
                if (!(slow == fast))
                    return exit_failed;
            } else {
                out << "mostar_bfs: skipped (n > " << bench_bfs_max << ")\n";
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace mostar::cli
