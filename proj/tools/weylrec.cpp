// Command-line front end: construct q-Whittaker polynomials, graded
// characters and Hilbert series, verify the symmetric-function and
// BGG-reciprocity identities, and export everything as text or JSON.
//
// Exit codes: 0 pass, 1 exact-coefficient mismatch, 2 usage error,
// 3 inconclusive stabilization.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "weylrec/cache.hpp"
#include "weylrec/json_io.hpp"
#include "weylrec/macdonald.hpp"
#include "weylrec/render.hpp"
#include "weylrec/weylchar.hpp"

using namespace weylrec;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct OutputOptions {
    std::string format = "text";
    std::string out_file;
};

void emit(const OutputOptions& opt, const std::string& text, const nlohmann::json& json) {
    std::string payload = opt.format == "json" ? json.dump(2) + "\n" : text;
    if (opt.out_file.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opt.out_file);
        if (!out) throw CLI::ValidationError("--out", "cannot open " + opt.out_file);
        out << payload;
    }
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw CLI::ValidationError("--partition", "empty component in " + s);
            parts.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--partition", e.what());
    }
}

DominantWeight parse_weight(const std::string& s, int rank) {
    std::vector<int> coords;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw CLI::ValidationError("--weight", "empty component in " + s);
            coords.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (static_cast<int>(coords.size()) == 1 && coords[0] == 0)
        coords.assign(static_cast<size_t>(rank - 1), 0);
    if (static_cast<int>(coords.size()) != rank - 1)
        throw CLI::ValidationError("--weight", "expected rank-1 coordinates");
    try {
        return DominantWeight(std::move(coords));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--weight", e.what());
    }
}

int parse_mu_bound(const std::string& s) {
    if (s == "auto") return -1;
    try {
        int v = std::stoi(s);
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--mu-bound", "expected 'auto' or a nonnegative integer");
    }
}

// In-process store plus the WEYLREC_CACHE_DIR disk cache for exact tables.
class TableStore {
public:
    const QWhittakerTable& get(int rank, int max_size, bool q_zero = false) {
        auto key = std::make_pair(rank, q_zero);
        auto it = tables_.find(key);
        if (it != tables_.end() && it->second.max_size >= max_size) return it->second;
        std::string dir = cache_dir_from_env();
        if (it == tables_.end()) {
            if (auto cached = load_cached_table(dir, rank, max_size, q_zero)) {
                return tables_.emplace(key, std::move(*cached)).first->second;
            }
            QWhittakerTable t = qwhittaker(rank, max_size, q_zero);
            save_cached_table(dir, t);
            return tables_.emplace(key, std::move(t)).first->second;
        }
        QWhittakerTable t = qwhittaker_extend(it->second, max_size);
        save_cached_table(dir, t);
        it->second = std::move(t);
        return it->second;
    }

private:
    std::map<std::pair<int, bool>, QWhittakerTable> tables_;
};

nlohmann::json eta_to_json(const EtaTable& eta) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& [idx, poly] : eta.coeffs) {
        coeffs.push_back(nlohmann::json{
            {"lambda", to_json(idx.lambda)}, {"ell", idx.ell}, {"poly", to_json(poly)}});
    }
    return {{"mu", to_json(eta.mu)}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json character_to_json(const GradedCharacter& ch) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [key, mult] : ch.mults) {
        rows.push_back(nlohmann::json{{"weight", key.first.coords()},
                                      {"grade", key.second},
                                      {"mult", mult.get_str()}});
    }
    return rows;
}

nlohmann::json hilbert_to_json(const HilbertSeries& h) {
    if (h.kind == HilbertSeries::Kind::Exact)
        return {{"kind", "exact"}, {"value", to_json(h.exact)}};
    return {{"kind", "truncated"}, {"value", to_json(h.truncated)}};
}

nlohmann::json reciprocity_to_json(const std::vector<ReciprocityRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& row : rows)
        j.push_back(nlohmann::json{
            {"mu", row.mu.coords()}, {"s", row.grade}, {"mult", row.mult.get_str()}});
    return j;
}

int report_exit_code(const Report& rep) {
    if (rep.status == "pass") return kExitPass;
    if (rep.status == "inconclusive") return kExitInconclusive;
    return kExitFail;
}

int emit_report(const OutputOptions& opt, const Report& rep) {
    emit(opt, rep.to_text(), rep.to_json());
    return report_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-Whittaker / current-algebra character calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.out_file, "write output to FILE instead of stdout");

    TableStore store;

    int rank = 2;
    std::string partition_arg, weight_arg = "0", basis = "m", mu_bound_arg = "auto";
    int order = 6, degree = 6, max_size = 5, max_m = 3, max_grade = 4, jobs = 1;

    auto* cmd_mac = app.add_subcommand("macdonald", "q-Whittaker polynomial P_xi(x;q,0)");
    cmd_mac->fallthrough();
    cmd_mac->add_option("--rank", rank, "number of variables")->required();
    cmd_mac->add_option("--partition", partition_arg, "xi as a,b,...")->required();
    cmd_mac->add_option("--basis", basis, "m or s")->check(CLI::IsMember({"m", "s"}));

    auto* cmd_char = app.add_subcommand("character", "graded characters");
    auto* cmd_char_lw = cmd_char->add_subcommand("local-weyl", "graded character of W_loc(lambda,0)");
    cmd_char->fallthrough();
    cmd_char_lw->fallthrough();
    cmd_char_lw->add_option("--rank", rank, "sl_rank")->required();
    cmd_char_lw->add_option("--weight", weight_arg, "fundamental coordinates a,b,...")->required();

    auto* cmd_hil = app.add_subcommand("hilbert", "Hilbert series");
    cmd_hil->fallthrough();
    std::string which_hilbert;
    cmd_hil->add_option("which", which_hilbert, "local | global | projective")
        ->required()
        ->check(CLI::IsMember({"local", "global", "projective"}));
    cmd_hil->add_option("--rank", rank, "sl_rank")->required();
    cmd_hil->add_option("--weight", weight_arg, "fundamental coordinates")->required();
    cmd_hil->add_option("--order", order, "truncation order for global/projective");

    auto* cmd_ver = app.add_subcommand("verify", "verify an identity, exit 0 iff it holds");
    cmd_ver->fallthrough();
    std::string identity;
    cmd_ver->add_option("identity", identity, "identity name")
        ->required()
        ->check(CLI::IsMember({"orthonormality", "cauchy-kernels", "cauchy-t0", "mult", "lim",
                               "lhs", "crucial", "norms", "reciprocity"}));
    cmd_ver->add_option("--rank", rank, "rank / number of variables");
    cmd_ver->add_option("--order", order, "q-truncation order");
    cmd_ver->add_option("--degree", degree, "x-degree bound");
    cmd_ver->add_option("--max-size", max_size, "partition size bound");
    cmd_ver->add_option("--max-m", max_m, "largest asymptotic coefficient index");
    cmd_ver->add_option("--weight", weight_arg, "weight for reciprocity");
    cmd_ver->add_option("--partition", partition_arg, "lambda for crucial");
    cmd_ver->add_option("--mu-bound", mu_bound_arg, "'auto' or explicit bound");
    cmd_ver->add_option("--jobs", jobs, "worker threads for cell evaluation");

    auto* cmd_rec = app.add_subcommand("reciprocity", "filtration multiplicity table of P(lambda,0)");
    cmd_rec->fallthrough();
    cmd_rec->add_option("--rank", rank, "sl_rank")->required();
    cmd_rec->add_option("--weight", weight_arg, "fundamental coordinates")->required();
    cmd_rec->add_option("--max-grade", max_grade, "largest grade s listed");
    cmd_rec->add_option("--mu-bound", mu_bound_arg, "'auto' or explicit size bound on xi(mu)");

    try {
        app.parse(argc, argv);

        if (cmd_mac->parsed()) {
            Partition xi = parse_partition(partition_arg);
            if (rank < 1 || xi.length() != rank)
                throw CLI::ValidationError("--partition", "length must equal rank");
            const QWhittakerTable& table = store.get(rank, static_cast<int>(xi.size()));
            if (basis == "m") {
                const auto& entry = table.entry(xi);
                emit(out, msym_pretty(entry) + "\n",
                     nlohmann::json{{"partition", to_json(xi)}, {"basis", "m"}, {"value", to_json(entry)}});
            } else {
                EtaTable eta = eta_coeffs(xi, rank, table);
                emit(out, eta_pretty(eta) + "\n",
                     nlohmann::json{{"partition", to_json(xi)}, {"basis", "s"}, {"value", eta_to_json(eta)}});
            }
            return kExitPass;
        }

        if (cmd_char_lw->parsed()) {
            if (rank < 2) throw CLI::ValidationError("--rank", "rank >= 2 required");
            DominantWeight lw = parse_weight(weight_arg, rank);
            Partition xi = weight_to_partition(lw, rank);
            const QWhittakerTable& table = store.get(rank, static_cast<int>(xi.size()));
            GradedCharacter ch = local_weyl_character(lw, rank, table);
            emit(out, character_pretty(ch), character_to_json(ch));
            return kExitPass;
        }

        if (cmd_hil->parsed()) {
            if (rank < 2) throw CLI::ValidationError("--rank", "rank >= 2 required");
            DominantWeight lw = parse_weight(weight_arg, rank);
            Partition xi = weight_to_partition(lw, rank);
            HilbertSeries h;
            if (which_hilbert == "local") {
                h = hilbert_local(lw, rank, store.get(rank, static_cast<int>(xi.size())));
            } else if (which_hilbert == "global") {
                h = hilbert_global(lw, rank, order, store.get(rank, static_cast<int>(xi.size())));
            } else {
                h = hilbert_projective(lw, rank, order);
            }
            emit(out, hilbert_pretty(h) + "\n",
                 nlohmann::json{{"module", which_hilbert}, {"weight", lw.coords()}, {"series", hilbert_to_json(h)}});
            return kExitPass;
        }

        if (cmd_ver->parsed()) {
            int mu_bound = parse_mu_bound(mu_bound_arg);
            Report rep;
            if (identity == "orthonormality") {
                rep = verify_orthonormality(rank, cmd_ver->count("--degree") ? degree : 5, jobs);
            } else if (identity == "cauchy-kernels") {
                rep = verify_cauchy_kernels(rank, degree);
            } else if (identity == "cauchy-t0") {
                rep = verify_cauchy_t0(rank, degree, cmd_ver->count("--order") ? order : 8);
            } else if (identity == "mult") {
                rep = verify_mult(rank, cmd_ver->count("--degree") ? degree : 3);
            } else if (identity == "lim") {
                std::vector<Partition> lambdas;
                int lam_bound = cmd_ver->count("--degree") ? degree : 3;
                for (int sz = 0; sz <= lam_bound; ++sz)
                    for (const Partition& lam : enumerate_partitions(std::max(1, rank - 1), sz))
                        if (rank == 1 ? lam.is_zero() : lam.nonzero_length() <= rank - 1)
                            lambdas.push_back(lam);
                rep = verify_lim(rank, std::max(order, max_m), max_m, lambdas);
            } else if (identity == "lhs") {
                rep = verify_lhs(rank, degree, order);
            } else if (identity == "crucial") {
                Partition lam = partition_arg.empty()
                                    ? Partition().padded(std::max(0, rank - 1))
                                    : parse_partition(partition_arg);
                rep = verify_crucial(lam, rank, order, mu_bound);
            } else if (identity == "norms") {
                rep = verify_norms(rank, max_size);
            } else {
                DominantWeight lw = parse_weight(weight_arg, rank);
                rep = verify_reciprocity(lw, rank, order, mu_bound, jobs);
            }
            return emit_report(out, rep);
        }

        if (cmd_rec->parsed()) {
            if (rank < 2) throw CLI::ValidationError("--rank", "rank >= 2 required");
            DominantWeight lw = parse_weight(weight_arg, rank);
            Partition xi = weight_to_partition(lw, rank);
            int bound = parse_mu_bound(mu_bound_arg);
            if (bound < 0) bound = static_cast<int>(xi.size()) + rank * max_grade;
            auto rows = reciprocity_multiplicities(lw, rank, max_grade, bound);
            auto rows_again = reciprocity_multiplicities(lw, rank, max_grade, bound + rank);
            std::vector<ReciprocityRow> prefix;
            for (auto& row : rows_again)
                if (weight_to_partition(row.mu, rank).size() <= bound) prefix.push_back(row);
            bool stable = prefix.size() == rows.size();
            for (size_t i = 0; stable && i < rows.size(); ++i)
                stable = rows[i].mu == prefix[i].mu && rows[i].grade == prefix[i].grade &&
                         rows[i].mult == prefix[i].mult;
            std::string text = reciprocity_pretty(rows) +
                               "# mu_bound=" + std::to_string(bound) +
                               " max_grade=" + std::to_string(max_grade) +
                               " stable=" + (stable ? "true" : "false") + "\n";
            nlohmann::json j{{"weight", lw.coords()},
                             {"max_grade", max_grade},
                             {"mu_bound", bound},
                             {"stable", stable},
                             {"rows", reciprocity_to_json(rows)}};
            emit(out, text, j);
            return stable ? kExitPass : kExitInconclusive;
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
