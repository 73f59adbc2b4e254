#include "symcoef/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcoef/conjectures.hpp"

namespace symcoef::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20230419;

// Malformed argument text is a usage problem (exit 1), unlike domain errors
// raised by well-formed but inconsistent inputs (exit 2).
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

Partition parse_partition_arg(const std::string& s) {
    try {
        return parse_partition(s);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Composition parse_composition_arg(const std::string& s) {
    try {
        return parse_composition(s);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

struct Config {
    std::optional<fs::path> cache_dir;
    bool json = false;
    int max_n = kDefaultMaxTableN;
    int var_budget = 8;
    int threads = 1;
    int oracle_n = kDefaultSchurWeylMaxN;
    std::uint64_t seed = kDefaultSeed;
};

std::optional<fs::path> default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "symcoef";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "symcoef";
    return std::nullopt;
}

Json json_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Json symfunc_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [p, c] : f.coeffs())
        terms.push_back({Json(p.parts()), json_int(numerator(c)), json_int(denominator(c))});
    return Json{{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

std::string symfunc_text(const SymFunc& f) {
    std::ostringstream os;
    char letter = "mehps"[static_cast<int>(f.basis())];
    bool first = true;
    for (const auto& [p, c] : f.coeffs()) {
        if (!first) os << "\n";
        first = false;
        os << c << "\t" << letter << "(" << format_partition(p) << ")";
    }
    if (first) os << "0";
    return os.str();
}

std::string tableau_text(const Tableau& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.rows().size(); ++i) {
        if (i) os << " / ";
        int pad = t.shape().inner().part(static_cast<int>(i));
        for (int k = 0; k < pad; ++k) os << ".,";
        for (size_t k = 0; k < t.rows()[i].size(); ++k) {
            if (k) os << ",";
            os << t.rows()[i][k];
        }
    }
    return os.str();
}

Json tableau_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) rows.push_back(r);
    Json j{{"rows", rows}};
    if (!t.shape().inner().empty()) j["inner"] = t.shape().inner().parts();
    return j;
}

void emit_value(const Config& cfg, std::ostream& out, const std::string& op,
                const std::vector<std::string>& args, const Int& value) {
    if (cfg.json) {
        Json j{{"op", op}, {"args", args}, {"value", json_int(value)}};
        out << j.dump() << "\n";
    } else {
        out << value << "\n";
    }
}

// ---------------------------------------------------------------------------
// batch processing

Json run_batch_op(const Json& line, const Config& cfg, const CharTableProvider& tables) {
    std::string op = line.at("op").get<std::string>();
    const Json& args = line.at("args");
    auto arg_str = [&](size_t i) { return args.at(i).get<std::string>(); };
    auto arg_partition = [&](size_t i) { return parse_partition(arg_str(i)); };
    auto arg_int = [&](size_t i) {
        if (args.at(i).is_number_integer()) return args.at(i).get<int>();
        return std::stoi(arg_str(i));
    };

    if (op == "kron" || op == "kronecker")
        return json_int(
            kronecker(TripleQuery{arg_partition(0), arg_partition(1), arg_partition(2)}, tables));
    if (op == "lr")
        return json_int(lr_coefficient(arg_partition(0), arg_partition(1), arg_partition(2)));
    if (op == "kostka")
        return json_int(kostka(arg_partition(0), parse_composition(arg_str(1))));
    if (op == "pleth_a")
        return json_int(pleth_a(arg_partition(0), arg_int(1), arg_int(2), cfg.var_budget));
    if (op == "sk")
        return json_int(symmetric_kronecker(arg_partition(0), arg_partition(1), tables));
    if (op == "character")
        return json_int(character_mn(arg_partition(0), parse_composition(arg_str(1))));
    if (op == "syt_count") return json_int(count_syt_hlf(arg_partition(0)));
    throw DomainError("unknown batch op '" + op + "'");
}

int run_batch(const Config& cfg, const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read batch file '" << path << "'\n";
        return 1;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    CharTableProvider tables(cfg.cache_dir, cfg.max_n);
    std::vector<std::string> results(lines.size());

    auto work = [&](size_t i) {
        Json record;
        try {
            record = Json::parse(lines[i]);
        } catch (const std::exception& e) {
            record = Json{{"raw", lines[i]}};
            record["error"] = std::string("unparseable line: ") + e.what();
            results[i] = record.dump();
            return;
        }
        try {
            record["value"] = run_batch_op(record, cfg, tables);
        } catch (const std::exception& e) {
            record["error"] = e.what();
        }
        results[i] = record.dump();
    };

    int threads = std::max(cfg.threads, 1);
    if (threads == 1) {
        for (size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(threads, static_cast<int>(lines.size()));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= lines.size()) return;
                    work(i);
                }
            });
        for (auto& t : pool) t.join();
    }
    // Output follows input order regardless of completion order.
    for (const auto& r : results) out << r << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tableau counts, characters, and structure constants of S_n and GL_N"};
    app.name("symcoef");
    app.require_subcommand(0, 1);

    Config cfg;
    std::string output_mode = "text";
    std::string cache_dir_flag;
    app.add_option("--output", output_mode, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", cache_dir_flag,
                   "character table cache directory (overrides SYMCOEF_CACHE_DIR)");
    app.add_option("--max-n", cfg.max_n, "character table bound");
    app.add_option("--var-budget", cfg.var_budget, "plethysm variable budget");
    app.add_option("--threads", cfg.threads, "worker count for batch processing");
    app.add_option("--oracle-n", cfg.oracle_n, "size bound for the Schur-Weyl Kronecker oracle");
    app.add_option("--seed", cfg.seed, "sampling seed for randomized suites");

    // ---- subcommands (positional values owned by this frame) ----
    std::string arg_a, arg_b, arg_c;
    int arg_n = 0, arg_d = 0, arg_k = 0;
    int opt_samples = 200, opt_bound = 10;
    std::optional<int> opt_max_part, opt_max_length;
    int opt_enum_cap = kDefaultPartitionEnumCap;
    int opt_tab_cap = kDefaultTableauEnumCap;
    bool flag_schur_weyl = false;
    std::string algorithm = "mn";

    CLI::App* p_info = nullptr;
    CLI::App* p_enum = nullptr;
    {
        auto* partition_cmd = app.add_subcommand("partition", "partition utilities");
        partition_cmd->fallthrough();
        p_info = partition_cmd->add_subcommand("info", "size, conjugate, hooks, durfee, z");
        p_info->fallthrough();
        p_info->add_option("partition", arg_a, "partition, e.g. 4,3,1")->required();
        p_enum = partition_cmd->add_subcommand("enumerate", "all partitions of n");
        p_enum->fallthrough();
        p_enum->add_option("n", arg_n, "size")->required();
        p_enum->add_option("--max-part", opt_max_part, "largest part allowed");
        p_enum->add_option("--max-length", opt_max_length, "largest length allowed");
        p_enum->add_option("--cap", opt_enum_cap, "enumeration size cap");
    }

    CLI::App* s_count = nullptr;
    CLI::App* s_list = nullptr;
    {
        auto* syt = app.add_subcommand("syt", "standard Young tableaux");
        syt->fallthrough();
        s_count = syt->add_subcommand("count", "f^lambda by the hook-length formula");
        s_count->fallthrough();
        s_count->add_option("shape", arg_a)->required();
        s_list = syt->add_subcommand("list", "enumerate all SYT");
        s_list->fallthrough();
        s_list->add_option("shape", arg_a)->required();
        s_list->add_option("--cap", opt_tab_cap, "enumeration size cap");
    }

    auto* rsk_cmd = app.add_subcommand("rsk", "Schensted insertion of a permutation");
    rsk_cmd->fallthrough();
    rsk_cmd->add_option("word", arg_a, "permutation word, e.g. 4,1,2,3")->required();

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{shape,content}");
    kostka_cmd->fallthrough();
    kostka_cmd->add_option("shape", arg_a)->required();
    kostka_cmd->add_option("content", arg_b)->required();

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr_cmd->fallthrough();
    lr_cmd->add_option("outer", arg_a)->required();
    lr_cmd->add_option("inner", arg_b, "may be empty: ''")->required();
    lr_cmd->add_option("content", arg_c)->required();

    CLI::App* c_value = nullptr;
    CLI::App* c_table = nullptr;
    {
        auto* character = app.add_subcommand("character", "symmetric group characters");
        character->fallthrough();
        c_value = character->add_subcommand("value", "chi^lambda(alpha)");
        c_value->fallthrough();
        c_value->add_option("lambda", arg_a)->required();
        c_value->add_option("alpha", arg_b)->required();
        c_value->add_option("--algorithm", algorithm, "mn or jt")
            ->check(CLI::IsMember({"mn", "jt"}));
        c_table = character->add_subcommand("table", "full character table of S_n");
        c_table->fallthrough();
        c_table->add_option("n", arg_n)->required();
    }

    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient g(lambda,mu,nu)");
    kron_cmd->fallthrough();
    kron_cmd->add_option("lambda", arg_a)->required();
    kron_cmd->add_option("mu", arg_b)->required();
    kron_cmd->add_option("nu", arg_c)->required();
    kron_cmd->add_flag("--schur-weyl", flag_schur_weyl, "use the polynomial oracle route");

    auto* sk_cmd = app.add_subcommand("sk", "symmetric Kronecker coefficient sk(lambda,mu)");
    sk_cmd->fallthrough();
    sk_cmd->add_option("lambda", arg_a)->required();
    sk_cmd->add_option("mu", arg_b)->required();

    CLI::App* pl_expand = nullptr;
    CLI::App* pl_coeff = nullptr;
    CLI::App* pl_a = nullptr;
    {
        auto* pleth = app.add_subcommand("pleth", "plethysm");
        pleth->fallthrough();
        pl_expand = pleth->add_subcommand("expand", "Schur expansion of s_outer[s_inner]");
        pl_expand->fallthrough();
        pl_expand->add_option("outer", arg_a)->required();
        pl_expand->add_option("inner", arg_b)->required();
        pl_coeff = pleth->add_subcommand("coeff", "a^lambda_{inner,outer}");
        pl_coeff->fallthrough();
        pl_coeff->add_option("lambda", arg_a)->required();
        pl_coeff->add_option("inner", arg_b)->required();
        pl_coeff->add_option("outer", arg_c)->required();
        pl_a = pleth->add_subcommand("a", "a_lambda(d[n]) = <s_lambda, h_d[h_n]>");
        pl_a->fallthrough();
        pl_a->add_option("lambda", arg_a)->required();
        pl_a->add_option("d", arg_d)->required();
        pl_a->add_option("n", arg_n)->required();
    }

    CLI::App* v_saxl = nullptr;
    CLI::App* v_tensor = nullptr;
    CLI::App* v_charb = nullptr;
    CLI::App* v_foulkes = nullptr;
    CLI::App* v_dip = nullptr;
    CLI::App* v_kp = nullptr;
    CLI::App* v_semi = nullptr;
    {
        auto* verify = app.add_subcommand("verify", "identity and conjecture suites");
        verify->fallthrough();
        verify->require_subcommand(1);
        v_saxl = verify->add_subcommand("saxl", "g(delta_k,delta_k,mu) > 0 for all mu");
        v_saxl->fallthrough();
        v_saxl->add_option("--k", arg_k)->required();
        v_tensor = verify->add_subcommand("tensor-square", "self-conjugate tensor-square witnesses");
        v_tensor->fallthrough();
        v_tensor->add_option("--n", arg_n)->required();
        v_charb = verify->add_subcommand("char-bound", "g(lambda,lambda,mu) >= |chi^mu(hooks)|");
        v_charb->fallthrough();
        v_charb->add_option("--n", arg_n)->required();
        v_foulkes = verify->add_subcommand("foulkes", "a_lambda(d[n]) >= a_lambda(n[d]), d > n");
        v_foulkes->fallthrough();
        v_foulkes->add_option("--n", arg_n)->required();
        v_foulkes->add_option("--d", arg_d)->required();
        v_dip = verify->add_subcommand("dip", "a_lambda((n+1)[n]) = 1 + a_lambda(n[n+1])");
        v_dip->fallthrough();
        v_dip->add_option("--n", arg_n)->required();
        v_kp = verify->add_subcommand("kron-pleth", "g(lambda,n^d,n^d) >= a_lambda(d[n])");
        v_kp->fallthrough();
        v_kp->add_option("--rho", arg_a)->required();
        v_kp->add_option("--n", arg_n)->required();
        v_kp->add_option("--d", arg_d)->required();
        v_semi = verify->add_subcommand("semigroup", "semigroup property on random triples");
        v_semi->fallthrough();
        v_semi->add_option("--samples", opt_samples);
        v_semi->add_option("--bound", opt_bound);
    }

    auto* batch_cmd = app.add_subcommand("batch", "process a JSON-lines query file");
    batch_cmd->fallthrough();
    std::string batch_file;
    batch_cmd->add_option("file", batch_file)->required();

    CLI::App* cache_status = nullptr;
    CLI::App* cache_clear = nullptr;
    {
        auto* cache_cmd = app.add_subcommand("cache", "character table cache management");
        cache_cmd->fallthrough();
        cache_status = cache_cmd->add_subcommand("status", "list cached tables");
        cache_status->fallthrough();
        cache_clear = cache_cmd->add_subcommand("clear", "remove cached tables");
        cache_clear->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    cfg.json = output_mode == "json";
    if (!cache_dir_flag.empty())
        cfg.cache_dir = fs::path(cache_dir_flag);
    else if (const char* env = std::getenv("SYMCOEF_CACHE_DIR"); env && *env)
        cfg.cache_dir = fs::path(env);
    else
        cfg.cache_dir = default_cache_dir();

    try {
        if (app.get_subcommands().empty()) {
            out << app.help();
            return 0;
        }

        auto one_arg = [&]() { return std::vector<std::string>{arg_a}; };
        auto two_args = [&]() { return std::vector<std::string>{arg_a, arg_b}; };
        auto three_args = [&]() { return std::vector<std::string>{arg_a, arg_b, arg_c}; };

        if (p_info && p_info->parsed()) {
            Partition p = parse_partition_arg(arg_a);
            bool self_conj = conjugate(p) == p;
            if (cfg.json) {
                Json j{{"partition", p.parts()},
                       {"size", p.size()},
                       {"length", p.length()},
                       {"conjugate", conjugate(p).parts()},
                       {"durfee", durfee(p)},
                       {"z", json_int(z_value(p))},
                       {"self_conjugate", self_conj},
                       {"hooks", hook_lengths(p)},
                       {"syt_count", json_int(count_syt_hlf(p))}};
                if (self_conj) j["principal_hooks"] = principal_hooks(p).parts();
                out << j.dump() << "\n";
            } else {
                out << "partition: " << format_partition(p) << "\n";
                out << "size: " << p.size() << "\n";
                out << "length: " << p.length() << "\n";
                out << "conjugate: " << format_partition(conjugate(p)) << "\n";
                out << "durfee: " << durfee(p) << "\n";
                out << "z: " << z_value(p) << "\n";
                out << "syt_count: " << count_syt_hlf(p) << "\n";
                out << "self_conjugate: " << (self_conj ? "yes" : "no") << "\n";
                if (self_conj)
                    out << "principal_hooks: " << format_composition(principal_hooks(p)) << "\n";
                out << "hooks:";
                for (const auto& row : hook_lengths(p)) {
                    out << "\n ";
                    for (int h : row) out << " " << h;
                }
                out << "\n";
            }
            return 0;
        }
        if (p_enum && p_enum->parsed()) {
            PartitionConstraints c;
            c.max_part = opt_max_part;
            c.max_length = opt_max_length;
            auto list = enumerate_partitions(arg_n, c, opt_enum_cap);
            if (cfg.json) {
                Json arr = Json::array();
                for (const auto& p : list) arr.push_back(p.parts());
                out << Json{{"n", arg_n}, {"count", list.size()}, {"partitions", arr}}.dump()
                    << "\n";
            } else {
                for (const auto& p : list) out << format_partition(p) << "\n";
            }
            return 0;
        }
        if (s_count && s_count->parsed()) {
            emit_value(cfg, out, "syt_count", one_arg(), count_syt_hlf(parse_partition_arg(arg_a)));
            return 0;
        }
        if (s_list && s_list->parsed()) {
            auto list = enumerate_syt(parse_partition_arg(arg_a), opt_tab_cap);
            if (cfg.json) {
                Json arr = Json::array();
                for (const auto& t : list) arr.push_back(tableau_json(t));
                out << Json{{"count", list.size()}, {"tableaux", arr}}.dump() << "\n";
            } else {
                for (const auto& t : list) out << tableau_text(t) << "\n";
            }
            return 0;
        }
        if (rsk_cmd->parsed()) {
            Composition word = parse_composition_arg(arg_a);
            Permutation w;
            try {
                w = Permutation(word.parts());
            } catch (const DomainError& e) {
                throw UsageError(e.what());
            }
            auto [P, Q] = rsk(w);
            if (cfg.json) {
                out << Json{{"P", tableau_json(P)}, {"Q", tableau_json(Q)}}.dump() << "\n";
            } else {
                out << "P: " << tableau_text(P) << "\n";
                out << "Q: " << tableau_text(Q) << "\n";
            }
            return 0;
        }
        if (kostka_cmd->parsed()) {
            emit_value(cfg, out, "kostka", two_args(),
                       kostka(parse_partition_arg(arg_a), parse_composition_arg(arg_b)));
            return 0;
        }
        if (lr_cmd->parsed()) {
            emit_value(cfg, out, "lr", three_args(),
                       lr_coefficient(parse_partition_arg(arg_a), parse_partition_arg(arg_b),
                                      parse_partition_arg(arg_c)));
            return 0;
        }
        if (c_value && c_value->parsed()) {
            Partition lam = parse_partition_arg(arg_a);
            Composition alpha = parse_composition_arg(arg_b);
            Int v = algorithm == "jt" ? character_jt(lam, alpha) : character_mn(lam, alpha);
            emit_value(cfg, out, "character", two_args(), v);
            return 0;
        }
        if (c_table && c_table->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            auto table = tables.table(arg_n);
            if (cfg.json) {
                Json parts = Json::array();
                for (const auto& p : table->partitions()) parts.push_back(p.parts());
                Json values = Json::array();
                for (size_t l = 0; l < table->count(); ++l) {
                    Json row = Json::array();
                    for (size_t a = 0; a < table->count(); ++a) row.push_back(table->value(l, a));
                    values.push_back(std::move(row));
                }
                out << Json{{"n", arg_n}, {"partitions", parts}, {"values", values}}.dump()
                    << "\n";
            } else {
                size_t width = 0;
                std::vector<std::string> labels;
                for (const auto& p : table->partitions()) {
                    labels.push_back(format_partition(p));
                    width = std::max(width, labels.back().size());
                }
                for (size_t l = 0; l < table->count(); ++l) {
                    out << std::setw(static_cast<int>(width)) << labels[l] << " |";
                    for (size_t a = 0; a < table->count(); ++a)
                        out << " " << std::setw(6) << table->value(l, a);
                    out << "\n";
                }
            }
            return 0;
        }
        if (kron_cmd->parsed()) {
            TripleQuery q{parse_partition_arg(arg_a), parse_partition_arg(arg_b), parse_partition_arg(arg_c)};
            Int v;
            if (flag_schur_weyl) {
                v = kronecker_schur_weyl(q, std::max(q.second.length(), 1),
                                         std::max(q.third.length(), 1), cfg.oracle_n);
            } else {
                CharTableProvider tables(cfg.cache_dir, cfg.max_n);
                v = kronecker(q, tables);
            }
            emit_value(cfg, out, "kron", three_args(), v);
            return 0;
        }
        if (sk_cmd->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            emit_value(cfg, out, "sk", two_args(),
                       symmetric_kronecker(parse_partition_arg(arg_a), parse_partition_arg(arg_b), tables));
            return 0;
        }
        if (pl_expand && pl_expand->parsed()) {
            SymFunc f = plethysm(SymFunc::element(Basis::Schur, parse_partition_arg(arg_a)),
                                 SymFunc::element(Basis::Schur, parse_partition_arg(arg_b)),
                                 cfg.var_budget);
            if (cfg.json)
                out << symfunc_json(f).dump() << "\n";
            else
                out << symfunc_text(f) << "\n";
            return 0;
        }
        if (pl_coeff && pl_coeff->parsed()) {
            emit_value(cfg, out, "pleth_coeff", three_args(),
                       plethysm_coefficient(parse_partition_arg(arg_a), parse_partition_arg(arg_b),
                                            parse_partition_arg(arg_c), cfg.var_budget));
            return 0;
        }
        if (pl_a && pl_a->parsed()) {
            emit_value(cfg, out, "pleth_a",
                       {arg_a, std::to_string(arg_d), std::to_string(arg_n)},
                       pleth_a(parse_partition_arg(arg_a), arg_d, arg_n, cfg.var_budget));
            return 0;
        }

        auto emit_report = [&](const VerificationReport& report, bool theorem_level) {
            if (cfg.json)
                out << report.to_json() << "\n";
            else
                out << report.to_text() << "\n";
            if (!report.passed() && theorem_level)
                throw InternalError("theorem-level suite '" + report.suite + "' found " +
                                    std::to_string(report.failures.size()) + " counterexamples");
            return 0;
        };
        if (v_saxl && v_saxl->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            return emit_report(saxl_check(arg_k, tables), false);
        }
        if (v_tensor && v_tensor->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            return emit_report(tensor_square_search(arg_n, tables), false);
        }
        if (v_charb && v_charb->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            return emit_report(char_bound_check(arg_n, tables), true);
        }
        if (v_foulkes && v_foulkes->parsed())
            return emit_report(foulkes_check(arg_n, arg_d, cfg.var_budget), true);
        if (v_dip && v_dip->parsed()) return emit_report(dip_identity_check(arg_n), true);
        if (v_kp && v_kp->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            return emit_report(kron_pleth_check(parse_partition_arg(arg_a), arg_n, arg_d, tables),
                               true);
        }
        if (v_semi && v_semi->parsed()) {
            CharTableProvider tables(cfg.cache_dir, cfg.max_n);
            return emit_report(semigroup_check(opt_samples, opt_bound, cfg.seed, tables), true);
        }

        if (batch_cmd->parsed()) return run_batch(cfg, batch_file, out, err);

        if (cache_status && cache_status->parsed()) {
            if (!cfg.cache_dir) {
                out << "cache: disabled (no directory configured)\n";
                return 0;
            }
            Json files = Json::array();
            std::uintmax_t total = 0;
            std::vector<std::pair<std::string, std::uintmax_t>> rows;
            if (fs::exists(*cfg.cache_dir))
                for (const auto& entry : fs::directory_iterator(*cfg.cache_dir)) {
                    std::string name = entry.path().filename().string();
                    if (name.rfind("chartable-v1-n", 0) == 0 && name.ends_with(".json")) {
                        rows.emplace_back(name, entry.file_size());
                        total += entry.file_size();
                    }
                }
            std::sort(rows.begin(), rows.end());
            if (cfg.json) {
                for (const auto& [name, size] : rows)
                    files.push_back({{"file", name}, {"bytes", size}});
                out << Json{{"dir", cfg.cache_dir->string()},
                            {"files", files},
                            {"total_bytes", total}}
                           .dump()
                    << "\n";
            } else {
                out << "cache dir: " << cfg.cache_dir->string() << "\n";
                for (const auto& [name, size] : rows) out << name << " " << size << " bytes\n";
                out << "total: " << rows.size() << " tables, " << total << " bytes\n";
            }
            return 0;
        }
        if (cache_clear && cache_clear->parsed()) {
            int removed = 0;
            if (cfg.cache_dir && fs::exists(*cfg.cache_dir))
                for (const auto& entry : fs::directory_iterator(*cfg.cache_dir)) {
                    std::string name = entry.path().filename().string();
                    if (name.rfind("chartable-v1-n", 0) == 0 && name.ends_with(".json")) {
                        fs::remove(entry.path());
                        ++removed;
                    }
                }
            if (cfg.json)
                out << Json{{"removed", removed}}.dump() << "\n";
            else
                out << "removed " << removed << " cached tables\n";
            return 0;
        }

        err << "usage error: unhandled command\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        err << "internal-consistency error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace symcoef::cli
