#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinrock/barcore.hpp"
#include "spinrock/partition.hpp"
#include "spinrock/polynomial.hpp"
#include "spinrock/rock.hpp"
#include "spinrock/symmfunc.hpp"
#include "spinrock/verify.hpp"
#include "spinrock/wreath.hpp"

/* spinrock: exact combinatorics of abelian-defect RoCK blocks of double
 * covers of symmetric groups.
 *
 * Exit codes: 0 success, 2 usage / parse error, 3 domain precondition
 * violated, 4 verification failure.
 */

namespace {

using json = nlohmann::ordered_json;
using namespace spinrock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

/* Thrown after argument parsing for inputs that are well-formed but violate
 * a mathematical precondition (exit 3). */
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition_arg(const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        /* Malformed partition strings are usage errors (exit 2). */
        throw CLI::ValidationError("partition", e.what());
    }
}

json partition_json(const Partition& lam)
{
    return json(lam.parts);
}

json partition_list_json(const std::vector<Partition>& list)
{
    json arr = json::array();
    for (const Partition& lam : list)
        arr.push_back(partition_json(lam));
    return arr;
}

json polynomial_json(const IntPolynomial& poly)
{
    json coeffs = json::object();
    for (auto [e, c] : poly.coeffs)
        coeffs[std::to_string(e)] = c;
    return json{{"coeffs", coeffs}};
}

json j_label_json(const JMultipartition& lam)
{
    json arr = json::array();
    for (const Partition& comp : lam)
        arr.push_back(partition_json(comp));
    return arr;
}

std::string csv_quote(const std::string& text)
{
    return "\"" + text + "\"";
}

void emit_json(const json& doc)
{
    std::cout << doc.dump(2) << "\n";
}

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name)
{
    if (name == "table")
        return Format::Table;
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    throw CLI::ValidationError("--format", "expected table, csv or json");
}

/* Shared block options: -p, -d, --rho (explicit partition or "minimal"). */
struct BlockOptions {
    int p = 5;
    int d = 1;
    std::string rho_text = "minimal";

    RouquierBlock make() const
    {
        if (p < 3 || p % 2 == 0)
            throw DomainError("p must be an odd prime >= 3");
        if (d < 0)
            throw DomainError("d must be nonnegative");
        Partition rho = rho_text == "minimal" ? make_rouquier_core(p, d)
                                              : parse_partition_arg(rho_text);
        if (d >= p)
            std::cerr << "warning: d >= p; results are outside the proven "
                         "abelian-defect range\n";
        try {
            return make_block(p, rho, d);
        } catch (const std::domain_error& e) {
            throw DomainError(e.what());
        }
    }
};

void add_block_options(CLI::App* cmd, BlockOptions& opts)
{
    cmd->add_option("-p,--prime", opts.p, "Odd prime p")->required();
    cmd->add_option("-d,--weight", opts.d, "Block weight d")->required();
    cmd->add_option("--rho", opts.rho_text,
                    "d-Rouquier core, or \"minimal\" (default)");
}

json block_header_json(const RouquierBlock& block)
{
    json doc;
    doc["schema"] = 1;
    doc["p"] = block.p;
    doc["rho"] = partition_json(block.rho);
    doc["d"] = block.d;
    return doc;
}

std::string quotient_to_string(const BarQuotient& q)
{
    std::string out = "(";
    for (size_t i = 0; i < q.comps.size(); ++i) {
        if (i > 0)
            out += "; ";
        out += q.comps[i].to_string();
    }
    return out + ")";
}

/* Matrix emission shared by decomp / cartan (integer entries) and qdecomp
 * (polynomial entries); `show` renders one entry deterministically. */
template <class T, class Show>
void emit_matrix(const RouquierBlock& block, const LabeledMatrix<T>& mat,
                 Format format, Show&& show)
{
    if (format == Format::Json) {
        json doc = block_header_json(block);
        doc["row_labels"] = partition_list_json(mat.row_labels);
        doc["col_labels"] = partition_list_json(mat.col_labels);
        json entries = json::array();
        for (const auto& row : mat.entries) {
            json jrow = json::array();
            for (const T& entry : row)
                jrow.push_back(show(entry));
            entries.push_back(jrow);
        }
        doc["entries"] = entries;
        emit_json(doc);
        return;
    }

    std::vector<std::string> col_heads;
    for (const Partition& mu : mat.col_labels)
        col_heads.push_back(mu.to_string());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : mat.entries) {
        std::vector<std::string> line;
        for (const T& entry : row) {
            json v = show(entry);
            line.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        cells.push_back(std::move(line));
    }

    if (format == Format::Csv) {
        std::cout << "";
        for (const std::string& head : col_heads)
            std::cout << "," << csv_quote(head);
        std::cout << "\n";
        for (size_t r = 0; r < cells.size(); ++r) {
            std::cout << csv_quote(mat.row_labels[r].to_string());
            for (const std::string& cell : cells[r])
                std::cout << "," << cell;
            std::cout << "\n";
        }
        return;
    }

    std::cout << "# p=" << block.p << " rho=" << block.rho.to_string()
              << " d=" << block.d << "\n";
    size_t label_width = 0;
    for (const Partition& lam : mat.row_labels)
        label_width = std::max(label_width, lam.to_string().size());
    std::vector<size_t> widths(col_heads.size());
    for (size_t c = 0; c < col_heads.size(); ++c) {
        widths[c] = col_heads[c].size();
        for (const auto& row : cells)
            widths[c] = std::max(widths[c], row[c].size());
    }
    std::cout << std::string(label_width, ' ');
    for (size_t c = 0; c < col_heads.size(); ++c)
        std::cout << "  " << std::setw(static_cast<int>(widths[c]))
                  << col_heads[c];
    std::cout << "\n";
    for (size_t r = 0; r < cells.size(); ++r) {
        std::cout << std::setw(static_cast<int>(label_width))
                  << mat.row_labels[r].to_string();
        for (size_t c = 0; c < col_heads.size(); ++c)
            std::cout << "  " << std::setw(static_cast<int>(widths[c]))
                      << cells[r][c];
        std::cout << "\n";
    }
}

int default_jobs()
{
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    CLI::App app{"Exact RoCK-block combinatorics for double covers of "
                 "symmetric groups"};
    app.require_subcommand(1);
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "Worker threads for matrix assembly")
        ->capture_default_str();
    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format: table, csv, json")
        ->capture_default_str();

    /* barcore */
    auto* cmd_barcore = app.add_subcommand("barcore", "p-bar-core and weight");
    int barcore_p = 5;
    std::string barcore_lam;
    cmd_barcore->add_option("-p,--prime", barcore_p, "Odd prime p")->required();
    cmd_barcore->add_option("partition", barcore_lam, "p-strict partition")
        ->required();

    /* quotient */
    auto* cmd_quotient =
        app.add_subcommand("quotient", "Bar-quotient in a Rouquier block");
    BlockOptions quotient_opts;
    add_block_options(cmd_quotient, quotient_opts);
    std::string quotient_lam;
    cmd_quotient->add_option("partition", quotient_lam, "Block member")
        ->required();

    /* block */
    auto* cmd_block = app.add_subcommand("block", "Rouquier block inspection");
    cmd_block->require_subcommand(1);
    auto* cmd_block_info =
        cmd_block->add_subcommand("info", "Core recognition and residue counts");
    BlockOptions block_info_opts;
    add_block_options(cmd_block_info, block_info_opts);
    auto* cmd_block_list =
        cmd_block->add_subcommand("list", "Member partitions and label classes");
    BlockOptions block_list_opts;
    add_block_options(cmd_block_list, block_list_opts);

    /* decomp / qdecomp */
    auto* cmd_decomp =
        app.add_subcommand("decomp", "Decomposition matrix (entries dhat)");
    BlockOptions decomp_opts;
    add_block_options(cmd_decomp, decomp_opts);
    auto* cmd_qdecomp =
        app.add_subcommand("qdecomp", "q-decomposition polynomial matrix");
    BlockOptions qdecomp_opts;
    add_block_options(cmd_qdecomp, qdecomp_opts);

    /* cartan */
    auto* cmd_cartan = app.add_subcommand("cartan", "Unadjusted Cartan matrix");
    BlockOptions cartan_opts;
    cmd_cartan->add_option("-p,--prime", cartan_opts.p, "Odd prime p");
    cmd_cartan->add_option("-d,--weight", cartan_opts.d, "Block weight d");
    cmd_cartan->add_option("--rho", cartan_opts.rho_text,
                           "d-Rouquier core, or \"minimal\" (default)");
    std::string cartan_method = "closed";
    cmd_cartan->add_option("--method", cartan_method,
                           "closed, from-decomp or wreath")
        ->capture_default_str();
    int cartan_ell = 0;
    cmd_cartan->add_option("--ell", cartan_ell,
                           "Standalone wreath mode: Cartan matrix of "
                           "A_ell wr S_d with J-multipartition labels");

    /* symfunc */
    auto* cmd_symfunc =
        app.add_subcommand("symfunc", "Symmetric-function coefficients");
    cmd_symfunc->require_subcommand(1);
    auto* cmd_lr = cmd_symfunc->add_subcommand(
        "lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
    std::string lr_lam, lr_mu, lr_nu;
    cmd_lr->add_option("lambda", lr_lam, "Outer partition")->required();
    cmd_lr->add_option("mu", lr_mu, "First factor")->required();
    cmd_lr->add_option("nu", lr_nu, "Second factor")->required();
    auto* cmd_ikostka = cmd_symfunc->add_subcommand(
        "ikostka", "Inverse Kostka polynomial K^{-1}_{lambda,sigma}(t)");
    std::string ik_lam, ik_sigma;
    cmd_ikostka->add_option("lambda", ik_lam, "Row partition")->required();
    cmd_ikostka->add_option("sigma", ik_sigma, "Column partition")->required();
    long long ik_at = 0;
    CLI::Option* ik_at_opt = cmd_ikostka->add_option(
        "--at", ik_at, "Evaluate at an integer instead of printing the "
                       "polynomial");

    /* verify */
    auto* cmd_verify =
        app.add_subcommand("verify", "Run exact verification suites");
    std::vector<std::string> verify_suites;
    {
        std::string help = "Suite name (repeatable), or \"all\"; one of:";
        for (const std::string& name : suite_names())
            help += " " + name;
        cmd_verify->add_option("--suite", verify_suites, help)->required();
    }
    int verify_p = 0, verify_d = 0;
    cmd_verify->add_option("-p,--prime", verify_p,
                           "Restrict to configurations with this p");
    cmd_verify->add_option("-d,--weight", verify_d,
                           "Restrict to configurations with this d");
    bool verify_slow = false;
    cmd_verify->add_flag("--slow", verify_slow,
                         "Include the slow (p=5, d=3) configurations");

    /* Let the global --jobs / --format options appear after a subcommand. */
    auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
        for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
            sub->fallthrough();
            self(self, sub);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Format format = parse_format(format_name);

        if (*cmd_barcore) {
            Partition lam = parse_partition_arg(barcore_lam);
            if (barcore_p < 3 || barcore_p % 2 == 0)
                throw DomainError("p must be an odd prime >= 3");
            auto [core, weight] = [&] {
                try {
                    return bar_core(lam, barcore_p);
                } catch (const std::invalid_argument& e) {
                    throw DomainError(e.what());
                }
            }();
            if (format == Format::Json) {
                json doc;
                doc["schema"] = 1;
                doc["p"] = barcore_p;
                doc["core"] = partition_json(core);
                doc["weight"] = weight;
                emit_json(doc);
            } else {
                std::cout << "core " << core.to_string() << "\nweight " << weight
                          << "\n";
            }
            return kExitOk;
        }

        if (*cmd_quotient) {
            RouquierBlock block = quotient_opts.make();
            Partition lam = parse_partition_arg(quotient_lam);
            BarQuotient q = [&] {
                try {
                    return bar_quotient(lam, block);
                } catch (const std::invalid_argument& e) {
                    throw DomainError(e.what());
                } catch (const std::domain_error& e) {
                    throw DomainError(e.what());
                }
            }();
            if (format == Format::Json) {
                json doc = block_header_json(block);
                doc["lambda"] = partition_json(lam);
                doc["quotient"] = partition_list_json(q.comps);
                emit_json(doc);
            } else {
                std::cout << "quotient " << quotient_to_string(q) << "\nweight "
                          << q.total() << "\n";
            }
            return kExitOk;
        }

        if (*cmd_block_info) {
            /* Report recognition rather than failing, except that a core
             * that is not d-Rouquier is a domain error by contract. */
            RouquierBlock block = block_info_opts.make();
            /* Counts of parts congruent to i mod p for i = 1..p-1; the
             * entries beyond ell are zero for a Rouquier core. */
            std::vector<int> all_counts = residue_part_counts(block.rho, block.p);
            std::vector<int> counts(all_counts.begin() + 1, all_counts.end());
            if (format == Format::Json) {
                json doc = block_header_json(block);
                doc["ell"] = block.ell;
                doc["d_rouquier"] = true;
                doc["r_counts"] = json(counts);
                emit_json(doc);
            } else {
                std::cout << "rho " << block.rho.to_string() << "\np " << block.p
                          << "\nd " << block.d << "\nd-rouquier yes\nr-counts (";
                for (size_t i = 0; i < counts.size(); ++i)
                    std::cout << (i ? "," : "") << counts[i];
                std::cout << ")\n";
            }
            return kExitOk;
        }

        if (*cmd_block_list) {
            RouquierBlock block = block_list_opts.make();
            BlockLabels labels = block_partitions(block);
            if (format == Format::Json) {
                json doc = block_header_json(block);
                doc["all"] = partition_list_json(labels.all);
                doc["strict"] = partition_list_json(labels.strict);
                doc["restricted"] = partition_list_json(labels.restricted);
                doc["p_prime"] = partition_list_json(labels.p_prime);
                emit_json(doc);
            } else {
                std::cout << "# p=" << block.p << " rho="
                          << block.rho.to_string() << " d=" << block.d << "\n";
                for (const Partition& lam : labels.all) {
                    std::cout << lam.to_string();
                    if (is_strict(lam))
                        std::cout << " strict";
                    if (is_restricted(lam, block.p))
                        std::cout << " restricted";
                    if (is_p_prime(lam, block.p))
                        std::cout << " p-prime";
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }

        if (*cmd_decomp) {
            RouquierBlock block = decomp_opts.make();
            LabeledMatrix<ll> mat = decomp_matrix(block, jobs);
            emit_matrix(block, mat, format, [](ll v) { return json(v); });
            return kExitOk;
        }

        if (*cmd_qdecomp) {
            RouquierBlock block = qdecomp_opts.make();
            LabeledMatrix<IntPolynomial> mat = qdecomp_matrix(block, jobs);
            emit_matrix(block, mat, format, [&](const IntPolynomial& poly) {
                return format == Format::Json ? polynomial_json(poly)
                                              : json(poly.to_string());
            });
            return kExitOk;
        }

        if (*cmd_cartan) {
            if (cartan_method == "wreath" && cartan_ell > 0) {
                /* Standalone wreath Cartan matrix of A_ell wr S_d. */
                WreathCartan wc = wreath_cartan_matrix(cartan_ell, cartan_opts.d,
                                                       jobs);
                if (format == Format::Json) {
                    json doc;
                    doc["schema"] = 1;
                    doc["ell"] = cartan_ell;
                    doc["d"] = cartan_opts.d;
                    json labels = json::array();
                    for (const JMultipartition& lam : wc.labels)
                        labels.push_back(j_label_json(lam));
                    doc["row_labels"] = labels;
                    doc["col_labels"] = labels;
                    doc["entries"] = json(wc.entries);
                    emit_json(doc);
                } else {
                    for (size_t r = 0; r < wc.labels.size(); ++r) {
                        if (format == Format::Csv) {
                            std::cout << csv_quote(j_to_string(wc.labels[r]));
                            for (ll v : wc.entries[r])
                                std::cout << "," << v;
                        } else {
                            std::cout << j_to_string(wc.labels[r]);
                            for (ll v : wc.entries[r])
                                std::cout << " " << v;
                        }
                        std::cout << "\n";
                    }
                }
                return kExitOk;
            }
            RouquierBlock block = cartan_opts.make();
            LabeledMatrix<ll> mat;
            if (cartan_method == "closed")
                mat = unadjusted_cartan(block, CartanMethod::ClosedForm, jobs);
            else if (cartan_method == "from-decomp")
                mat = unadjusted_cartan(block, CartanMethod::FromDecomp, jobs);
            else if (cartan_method == "wreath")
                mat = cartan_via_wreath(block, jobs);
            else
                throw CLI::ValidationError(
                    "--method", "expected closed, from-decomp or wreath");
            emit_matrix(block, mat, format, [](ll v) { return json(v); });
            return kExitOk;
        }

        if (*cmd_lr) {
            ll value = lr_coeff(parse_partition_arg(lr_lam),
                                parse_partition_arg(lr_mu),
                                parse_partition_arg(lr_nu));
            if (format == Format::Json)
                emit_json(json{{"schema", 1}, {"value", value}});
            else
                std::cout << value << "\n";
            return kExitOk;
        }

        if (*cmd_ikostka) {
            Partition lam = parse_partition_arg(ik_lam);
            Partition sigma = parse_partition_arg(ik_sigma);
            if (ik_at_opt->count() > 0) {
                ll value = inverse_kostka_at(lam, sigma, ik_at);
                if (format == Format::Json)
                    emit_json(json{{"schema", 1}, {"value", value}});
                else
                    std::cout << value << "\n";
            } else {
                IntPolynomial poly = inverse_kostka(lam, sigma);
                if (format == Format::Json) {
                    json doc = polynomial_json(poly);
                    doc.insert(doc.begin(), {"schema", 1});
                    emit_json(doc);
                } else {
                    std::cout << poly.to_string('t') << "\n";
                }
            }
            return kExitOk;
        }

        if (*cmd_verify) {
            std::vector<std::string> names = verify_suites;
            if (names.size() == 1 && names[0] == "all")
                names = suite_names();
            const std::vector<std::string> known = suite_names();
            for (const std::string& name : names)
                if (std::find(known.begin(), known.end(), name) == known.end()) {
                    std::cerr << "unknown verification suite: " << name << "\n";
                    return kExitUsage;
                }
            bool all_pass = true;
            for (const std::string& name : names) {
                SuiteResult suite =
                    run_suite(name, verify_slow, jobs, verify_p, verify_d);
                for (const CheckResult& check : suite.checks) {
                    std::cout << suite.suite << " / " << check.name << ": "
                              << (check.pass ? "pass" : "FAIL") << " ("
                              << check.cases << " cases)";
                    if (!check.detail.empty())
                        std::cout << "  " << check.detail;
                    std::cout << "\n";
                }
                all_pass = all_pass && suite.pass();
            }
            std::cout << (all_pass ? "all suites passed" : "FAILURES above")
                      << "\n";
            return all_pass ? kExitOk : kExitVerification;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
