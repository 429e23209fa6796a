#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "hom_engine.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "summands.hpp"

namespace specht::cli {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitMismatch = 4;
constexpr int kDefaultMaxN = 13;

struct Config {
    std::string command;
    std::vector<std::string> args;
    int max_n = kDefaultMaxN;
    std::string format = "table";
    std::string out;
    bool oracle = false;
    int jobs = 1;
};

// engine and oracle disagree
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int default_max_n() {
    if (const char* env = std::getenv("SPECHT_MAX_N")) {
        try {
            return detail::parse_uint(env);
        } catch (const std::invalid_argument&) {
            // fall back to the built-in default
        }
    }
    return kDefaultMaxN;
}

// results land in input order whatever the completion order
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F&& f) {
    std::vector<T> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    for (int t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

inline std::vector<std::pair<int, int>> grid(int max_n) {
    std::vector<std::pair<int, int>> ab;
    for (int a = 4; a + 5 <= max_n; a += 2)
        for (int b = 2; a + b + 3 <= max_n; b += 2)
            ab.emplace_back(a, b);
    std::sort(ab.begin(), ab.end(), [](auto x, auto y) {
        return std::make_tuple(x.first + x.second, x.first) < std::make_tuple(y.first + y.second, y.first);
    });
    return ab;
}

inline void require_oracle_range(int n, int max_n) {
    if (n > max_n || n > oracle::kGuardMaxN)
        throw GuardError("n = " + std::to_string(n) + " exceeds the oracle limit " +
                         std::to_string(std::min(max_n, oracle::kGuardMaxN)));
}

// ---------------------------------------------------------------- commands

inline void cmd_classify(const Config& cfg, std::ostream& os) {
    Partition p = parse_partition(cfg.args.at(0));
    bool irr = is_irreducible_specht(p);
    if (cfg.format == "json") {
        nlohmann::json j{{"partition", to_string(p)},
                         {"irreducible", irr},
                         {"two_regular", is_two_regular(p)},
                         {"regularisation", to_string(regularise(p))},
                         {"two_core", to_string(two_core(p))},
                         {"two_quotient_separated", is_two_quotient_separated(p)}};
        os << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "partition,irreducible,two_regular,regularisation,two_core,two_quotient_separated\n"
           << csv_field(to_string(p)) << ',' << irr << ',' << is_two_regular(p) << ','
           << csv_field(to_string(regularise(p))) << ',' << csv_field(to_string(two_core(p))) << ','
           << is_two_quotient_separated(p) << '\n';
    } else {
        os << (irr ? "irreducible" : "reducible") << '\n';
    }
}

inline void cmd_homdim(const Config& cfg, std::ostream& os) {
    Partition mu = parse_partition(cfg.args.at(0));
    Partition lambda = parse_partition(cfg.args.at(1));
    if (mu.size() != lambda.size())
        throw std::invalid_argument("partitions of different sizes");
    auto dd = hom_dim_dual(mu, lambda);
    std::optional<std::size_t> brute;
    if (cfg.oracle) {
        require_oracle_range(mu.size(), cfg.max_n);
        brute = oracle::hom_dim_bruteforce(mu, lambda).dim;
    }
    if (cfg.format == "json") {
        nlohmann::json j{{"mu", to_string(mu)}, {"lambda", to_string(lambda)}, {"dim", dd.dim},
                         {"exact", dd.exact}, {"via_conjugates", dd.via_conjugates}};
        if (brute)
            j["oracle_dim"] = *brute;
        os << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "mu,lambda,dim,exact,oracle_dim\n"
           << csv_field(to_string(mu)) << ',' << csv_field(to_string(lambda)) << ',' << dd.dim << ','
           << dd.exact << ',' << (brute ? std::to_string(*brute) : "") << '\n';
    } else {
        os << "dim Hom(S^" << paren(mu) << ", S^" << paren(lambda) << ") = " << dd.dim
           << (dd.exact ? "" : " (lower bound)") << '\n';
        if (brute)
            os << "oracle: " << *brute << '\n';
    }
    if (brute && (dd.exact ? *brute != dd.dim : *brute < dd.dim))
        throw Mismatch("hom dimension disagrees with the oracle");
}

inline void cmd_summands(const Config& cfg, std::ostream& os) {
    int a = detail::parse_uint(cfg.args.at(0));
    int b = detail::parse_uint(cfg.args.at(1));
    Partition lambda = SummandParams::hook_form(a, b);
    parse_hook_form(lambda);
    std::vector<SummandVerdict> found;
    bool mismatch = false;
    std::vector<std::string> oracle_lines;
    for (const auto& mu : candidate_mus(a, b)) {
        auto v = check_summand(lambda, mu);
        if (v.is_summand)
            found.push_back(v);
        if (cfg.oracle && is_irreducible_specht(mu)) {
            require_oracle_range(lambda.size(), cfg.max_n);
            bool o = oracle::verify_summand(lambda, mu).is_summand;
            oracle_lines.push_back(paren(mu) + (o ? " summand" : " not a summand") +
                                   (o == v.is_summand ? "" : " (MISMATCH)"));
            mismatch |= o != v.is_summand;
        }
    }
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : found) {
            nlohmann::json j{{"mu", paren(v.mu)}, {"conjugate", paren(conjugate(v.mu))},
                             {"family", to_string(v.params->family)}, {"parity", v.parity_factor}};
            if (v.witness)
                j["witness"] = {{"gamma", combo_json(v.witness->gamma)},
                                {"delta_terms", v.witness->delta.size()},
                                {"composite", combo_json(v.witness->composite)},
                                {"scalar_odd", v.witness->scalar_odd},
                                {"target_nonzero", v.witness->target_nonzero}};
            arr.push_back(j);
        }
        nlohmann::json j{{"lambda", to_string(lambda)}, {"summands", arr}};
        if (cfg.oracle)
            j["oracle"] = oracle_lines;
        os << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "lambda,mu,conjugate,family\n";
        for (const auto& v : found)
            os << csv_field(to_string(lambda)) << ',' << csv_field(paren(v.mu)) << ','
               << csv_field(paren(conjugate(v.mu))) << ',' << to_string(v.params->family) << '\n';
    } else {
        for (const auto& v : found)
            os << paren(v.mu) << "  conjugate " << paren(conjugate(v.mu)) << " also\n";
        if (found.empty())
            os << "none\n";
        for (const auto& line : oracle_lines)
            os << "oracle: " << line << '\n';
    }
    if (mismatch)
        throw Mismatch("summand verdicts disagree with the oracle");
}

inline void cmd_survey(const Config& cfg, std::ostream& os) {
    auto ab = grid(cfg.max_n);
    auto rows = parallel_map<SurveyRecord>(ab.size(), cfg.jobs, [&](std::size_t i) {
        return survey(ab[i].first, ab[i].second);
    });
    if (cfg.oracle) {
        for (const auto& r : rows)
            require_oracle_range(r.n, cfg.max_n);
        auto ok = parallel_map<char>(rows.size(), cfg.jobs, [&](std::size_t i) -> char {
            Partition lambda = SummandParams::hook_form(rows[i].a, rows[i].b);
            std::vector<Partition> got;
            for (const auto& mu : candidate_mus(rows[i].a, rows[i].b))
                if (is_irreducible_specht(mu) && oracle::verify_summand(lambda, mu).is_summand)
                    got.push_back(mu);
            return got == rows[i].summands;
        });
        if (std::find(ok.begin(), ok.end(), 0) != ok.end())
            throw Mismatch("survey disagrees with the oracle");
    }
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back(survey_json(r));
        os << arr.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        write_survey_csv(os, rows);
    } else {
        for (const auto& r : rows)
            os << "(" << r.a << ",3,1^" << r.b << ")  n=" << r.n << "  summands: "
               << (r.summands.empty() ? "none" : join_partitions(r.summands, " ")) << "  corollary: "
               << r.corollary_case << '\n';
    }
}

// named consistency checks; each returns true on success
inline std::vector<std::pair<std::string, std::function<bool()>>> verify_checks(const Config& cfg) {
    std::vector<std::pair<std::string, std::function<bool()>>> checks;
    int max_n = cfg.max_n;
    checks.emplace_back("corollary matches summand lists", [max_n] {
        for (auto [a, b] : grid(std::max(max_n, 63)))
            if (survey(a, b).corollary_flag != !survey(a, b).summands.empty())
                return false;
        return true;
    });
    checks.emplace_back("hom dimensions match the closed forms", [max_n] {
        Semistandardiser ss;
        for (auto f : {Family::UV, Family::UV2})
            for (const auto& p : admissible_params(std::min(max_n, 17), f)) {
                auto up = hom_space(p.mu(), p.lambda(), &ss).dim();
                auto down = hom_dim_dual(p.lambda(), conjugate(p.mu()), &ss).dim;
                std::size_t want_up = 1, want_down = 1;
                if (f == Family::UV) {
                    want_down = (p.v == 1 || p.v == p.a + 1) ? 0 : 1;
                    if (p.v < 3 || p.v > p.a - 1)
                        want_up = up;  // no closed form outside 3 <= v <= a-1
                    else if (p.a % 4 == 0 && p.v % 4 == 1 && p.v <= p.b + 1)
                        want_up = 2;
                }
                if (up != want_up || down != want_down)
                    return false;
            }
        return true;
    });
    checks.emplace_back("composition scalars", [max_n] {
        for (auto f : {Family::UV, Family::UV2})
            for (const auto& p : admissible_params(std::min(max_n, 17), f)) {
                if (f == Family::UV && (p.v < 3 || p.v > p.a - 1))
                    continue;
                auto w = build_witness(p);
                auto [all, high] = count_T(p.u, p.v, p.a);
                std::uint64_t scalar = f == Family::UV2 ? binomial(p.u - p.v, p.a - p.v) : (p.a % 4 == 0 ? high : all);
                if (w.scalar_odd != (scalar % 2 == 1) || !w.target_nonzero)
                    return false;
            }
        return true;
    });
    if (cfg.oracle) {
        int jobs = cfg.jobs;
        checks.emplace_back("summands agree with the oracle", [max_n, jobs] {
            auto ab = grid(std::min(max_n, oracle::kGuardMaxN));
            auto ok = parallel_map<char>(ab.size(), jobs, [&](std::size_t i) -> char {
                auto [a, b] = ab[i];
                Partition lambda = SummandParams::hook_form(a, b);
                oracle::SpechtModel lam(lambda);
                for (const auto& mu : candidate_mus(a, b)) {
                    if (!is_irreducible_specht(mu))
                        continue;
                    oracle::SpechtModel m(mu);
                    auto c = oracle::verify_summand(lam, m);
                    if (!oracle::certified(c, lam, m) || c.is_summand != check_summand(lambda, mu, 0).is_summand)
                        return 0;
                }
                return 1;
            });
            return std::find(ok.begin(), ok.end(), 0) == ok.end();
        });
        checks.emplace_back("hom dimensions agree with the oracle", [max_n] {
            Semistandardiser ss;
            for (auto f : {Family::UV, Family::UV2})
                for (const auto& p : admissible_params(std::min(max_n, 11), f)) {
                    oracle::SpechtModel lam(p.lambda()), mu(p.mu()), muc(conjugate(p.mu()));
                    if (hom_space(p.mu(), p.lambda(), &ss).dim() !=
                        oracle::hom_generator_images(p.mu(), lam.rep()).rows())
                        return false;
                    if (hom_dim_dual(p.lambda(), conjugate(p.mu()), &ss).dim !=
                        oracle::hom_generator_images(p.lambda(), muc.rep()).rows())
                        return false;
                }
            return true;
        });
    }
    return checks;
}

inline void cmd_verify(const Config& cfg, std::ostream& os) {
    bool all = true;
    nlohmann::json results = nlohmann::json::array();
    for (auto& [name, check] : verify_checks(cfg)) {
        bool ok = check();
        all &= ok;
        if (cfg.format == "json")
            results.push_back({{"check", name}, {"pass", ok}});
        else if (cfg.format == "csv")
            results.push_back(csv_field(name) + "," + (ok ? "pass" : "fail"));
        else
            os << (ok ? "PASS  " : "FAIL  ") << name << '\n';
    }
    if (cfg.format == "json") {
        os << results.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "check,result\n";
        for (const auto& line : results)
            os << line.get<std::string>() << '\n';
    }
    if (!all)
        throw Mismatch("verification failed");
}

// ---------------------------------------------------------------- entry point

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Config cfg;
    cfg.max_n = default_max_n();
    CLI::App app{"Specht module summands over the field with two elements"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-n", cfg.max_n, "size limit for surveys and oracle runs")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--out", cfg.out, "write the report to this file");
        sub->add_flag("--oracle", cfg.oracle, "cross-check against explicit matrices");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    struct Spec {
        const char* name;
        const char* help;
        std::vector<const char*> positionals;
    };
    std::vector<Spec> specs{
        {"classify", "is S^p irreducible", {"partition"}},
        {"homdim", "dim Hom(S^mu, S^lambda)", {"mu", "lambda"}},
        {"summands", "irreducible Specht summands of S^(a,3,1^b)", {"a", "b"}},
        {"survey", "summands for every even a >= 4, b >= 2 with a+b+3 <= max-n", {}},
        {"verify", "run the consistency checks", {}},
    };
    std::vector<std::string> pos(2);
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        for (std::size_t i = 0; i < s.positionals.size(); ++i)
            sub->add_option(s.positionals[i], pos[i])->required();
        sub->callback([&cfg, &pos, &s] {
            cfg.command = s.name;
            cfg.args.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(s.positionals.size()));
        });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }
    std::ostringstream report;
    int status = kExitOk;
    try {
        // every command honours the limit once the oracle is involved
        if (cfg.oracle && cfg.max_n > oracle::kGuardMaxN)
            throw GuardError("--max-n " + std::to_string(cfg.max_n) + " exceeds the oracle limit " +
                             std::to_string(oracle::kGuardMaxN));
        if (cfg.command == "classify")
            cmd_classify(cfg, report);
        else if (cfg.command == "homdim")
            cmd_homdim(cfg, report);
        else if (cfg.command == "summands")
            cmd_summands(cfg, report);
        else if (cfg.command == "survey")
            cmd_survey(cfg, report);
        else
            cmd_verify(cfg, report);
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const Mismatch& e) {
        err << "mismatch: " << e.what() << '\n';
        status = kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
    if (cfg.out.empty()) {
        out << report.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "error: cannot write " << cfg.out << '\n';
            return kExitParse;
        }
        f << report.str();
    }
    return status;
}

}  // namespace specht::cli
