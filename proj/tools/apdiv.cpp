// apdiv: classify, verify, and count natural numbers whose large divisors
// form an arithmetic progression.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apdiv/census.hpp"
#include "apdiv/classify.hpp"
#include "apdiv/core.hpp"

namespace {

using apdiv::u64;
using json = nlohmann::ordered_json;

enum class OutputFormat { Human, Json, Csv };

// Decimal naturals, optionally in scientific shorthand (1e6, 2.5e3).
u64 parse_natural(const std::string& text) {
    std::size_t epos = text.find_first_of("eE");
    std::string mantissa = text.substr(0, epos);
    long exponent = 0;
    if (epos != std::string::npos) {
        exponent = std::stol(text.substr(epos + 1));
        if (exponent < 0) throw std::invalid_argument("negative exponent in '" + text + "'");
    }
    std::size_t dot = mantissa.find('.');
    if (dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
        if (exponent < 0) throw std::invalid_argument("'" + text + "' is not a natural number");
    }
    if (mantissa.empty() || mantissa.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("cannot parse '" + text + "' as a natural number");
    }
    apdiv::u128 value = 0;
    for (char c : mantissa) {
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value > apdiv::kMaxInput) throw std::out_of_range("'" + text + "' exceeds 2^63 - 1");
    }
    for (long i = 0; i < exponent; ++i) {
        value *= 10;
        if (value > apdiv::kMaxInput) throw std::out_of_range("'" + text + "' exceeds 2^63 - 1");
    }
    return static_cast<u64>(value);
}

OutputFormat parse_format(const std::string& name) {
    if (name == "human") return OutputFormat::Human;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + name + "'");
}

apdiv::Mode parse_mode(const std::string& name) {
    if (name == "exclusive") return apdiv::Mode::Exclusive;
    if (name == "inclusive") return apdiv::Mode::Inclusive;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

std::string join(const std::vector<u64>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json set_to_json(const apdiv::FormLabel& label, const apdiv::LargeDivisorSet& set) {
    json j;
    j["mode"] = set.mode == apdiv::Mode::Exclusive ? "exclusive" : "inclusive";
    j["form"] = apdiv::to_string(label.variant);
    j["witnesses"] = label.witnesses;
    j["divisors"] = set.divisors;
    j["is_ap"] = set.is_ap;
    if (set.common_difference) {
        j["common_difference"] = *set.common_difference;
    } else {
        j["common_difference"] = nullptr;
    }
    return j;
}

void print_classify_human(const apdiv::ClassificationResult& res) {
    auto line = [](const char* name, const apdiv::FormLabel& label,
                   const apdiv::LargeDivisorSet& set) {
        std::cout << name << ": form=" << apdiv::to_string(label.variant);
        if (!label.witnesses.empty()) std::cout << " witnesses=(" << join(label.witnesses, ",") << ")";
        std::cout << " divisors={" << join(set.divisors, ",") << "}"
                  << " is_ap=" << (set.is_ap ? "true" : "false");
        if (set.common_difference) std::cout << " common_difference=" << *set.common_difference;
        std::cout << "\n";
    };
    std::cout << "n = " << res.n << "\n";
    line("exclusive", res.exclusive_form, res.exclusive_set);
    line("inclusive", res.inclusive_form, res.inclusive_set);
    std::cout << "oracle_agrees = " << (res.oracle_agrees ? "true" : "false") << "\n";
}

int cmd_classify(u64 n, OutputFormat format) {
    apdiv::ClassificationResult res = apdiv::classify(n);
    switch (format) {
        case OutputFormat::Human:
            print_classify_human(res);
            break;
        case OutputFormat::Json: {
            json j;
            j["n"] = res.n;
            j["exclusive"] = set_to_json(res.exclusive_form, res.exclusive_set);
            j["inclusive"] = set_to_json(res.inclusive_form, res.inclusive_set);
            j["oracle_agrees"] = res.oracle_agrees;
            std::cout << j.dump() << "\n";
            break;
        }
        case OutputFormat::Csv: {
            std::cout << "n,mode,form,witnesses,divisors,is_ap,common_difference\n";
            auto row = [&](const apdiv::FormLabel& label, const apdiv::LargeDivisorSet& set) {
                std::cout << res.n << ","
                          << (set.mode == apdiv::Mode::Exclusive ? "exclusive" : "inclusive")
                          << "," << apdiv::to_string(label.variant) << ","
                          << join(label.witnesses, ";") << "," << join(set.divisors, ";") << ","
                          << (set.is_ap ? "true" : "false") << ",";
                if (set.common_difference) std::cout << *set.common_difference;
                std::cout << "\n";
            };
            row(res.exclusive_form, res.exclusive_set);
            row(res.inclusive_form, res.inclusive_set);
            break;
        }
    }
    if (!res.oracle_agrees) {
        std::cerr << "internal error: classifier disagrees with oracle at n=" << res.n << "\n";
        return 2;
    }
    return 0;
}

int cmd_verify(u64 limit, OutputFormat format, const apdiv::ScanOptions& options) {
    apdiv::VerifyReport rep = apdiv::verify_scan(limit, options);
    switch (format) {
        case OutputFormat::Human:
            std::cout << "scanned n <= " << rep.limit << "\n"
                      << "classifier mismatches:    " << rep.classifier_mismatches << "\n"
                      << "AP sets with |L_n| >= 4:  " << rep.long_ap_sets << "\n"
                      << "tau identity violations:  " << rep.tau_identity_violations << "\n"
                      << (rep.ok() ? "OK" : "FAILED") << "\n";
            break;
        case OutputFormat::Json: {
            json j;
            j["limit"] = rep.limit;
            j["checked"] = rep.checked;
            j["classifier_mismatches"] = rep.classifier_mismatches;
            j["long_ap_sets"] = rep.long_ap_sets;
            j["tau_identity_violations"] = rep.tau_identity_violations;
            j["ok"] = rep.ok();
            std::cout << j.dump() << "\n";
            break;
        }
        case OutputFormat::Csv:
            std::cout << "limit,checked,classifier_mismatches,long_ap_sets,tau_identity_violations\n"
                      << rep.limit << "," << rep.checked << "," << rep.classifier_mismatches
                      << "," << rep.long_ap_sets << "," << rep.tau_identity_violations << "\n";
            break;
    }
    return rep.ok() ? 0 : 2;
}

json report_to_json(const apdiv::CensusReport& report) {
    json j;
    j["x"] = report.x;
    j["mode"] = report.mode == apdiv::Mode::Exclusive ? "exclusive" : "inclusive";
    json fam;
    for (const auto& [form, count] : report.family_counts) fam[std::string(apdiv::to_string(form))] = count;
    j["family_counts"] = fam;
    j["total"] = report.total;
    j["landau_term"] = report.landau_term;
    j["ratio"] = report.ratio;
    return j;
}

int cmd_census(u64 limit, apdiv::Mode mode, bool brute, OutputFormat format,
               const apdiv::CensusOptions& options) {
    apdiv::CensusReport report =
        mode == apdiv::Mode::Inclusive ? apdiv::f_inclusive(limit) : apdiv::g_exclusive(limit);
    bool paths_agree = true;
    if (brute) {
        u64 brute_total = apdiv::brute_census(limit, mode, options);
        paths_agree = brute_total == report.total;
        if (!paths_agree) {
            std::cerr << "internal error: brute census " << brute_total
                      << " != closed form " << report.total << "\n";
        }
    }
    switch (format) {
        case OutputFormat::Human:
            std::cout << "x = " << report.x << " ("
                      << (mode == apdiv::Mode::Exclusive ? "exclusive" : "inclusive") << ")\n";
            for (const auto& [form, count] : report.family_counts) {
                std::printf("  %-18s %llu\n", std::string(apdiv::to_string(form)).c_str(),
                            static_cast<unsigned long long>(count));
            }
            std::cout << "total = " << report.total << "\n"
                      << "landau_term = " << report.landau_term << "\n"
                      << "ratio = " << report.ratio << "\n";
            if (brute) std::cout << (paths_agree ? "paths agree" : "paths DISAGREE") << "\n";
            break;
        case OutputFormat::Json: {
            json j = report_to_json(report);
            if (brute) j["paths_agree"] = paths_agree;
            std::cout << j.dump() << "\n";
            break;
        }
        case OutputFormat::Csv: {
            std::cout << "x,mode,form,count\n";
            for (const auto& [form, count] : report.family_counts) {
                std::cout << report.x << ","
                          << (mode == apdiv::Mode::Exclusive ? "exclusive" : "inclusive") << ","
                          << apdiv::to_string(form) << "," << count << "\n";
            }
            break;
        }
    }
    return paths_agree ? 0 : 2;
}

int cmd_ratio_table(const std::vector<u64>& limits, apdiv::Mode mode, OutputFormat format) {
    std::vector<apdiv::CensusReport> rows = apdiv::landau_ratio_table(limits, mode);
    switch (format) {
        case OutputFormat::Human:
        case OutputFormat::Csv:
            std::cout << "x,total,landau_term,ratio\n";
            for (const auto& row : rows) {
                std::printf("%llu,%llu,%.6f,%.6f\n", static_cast<unsigned long long>(row.x),
                            static_cast<unsigned long long>(row.total), row.landau_term,
                            row.ratio);
            }
            break;
        case OutputFormat::Json: {
            json j = json::array();
            for (const auto& row : rows) {
                json r;
                r["x"] = row.x;
                r["total"] = row.total;
                r["landau_term"] = row.landau_term;
                r["ratio"] = row.ratio;
                j.push_back(r);
            }
            std::cout << j.dump() << "\n";
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic progressions among the large divisors of n"};
    app.require_subcommand(1);

    std::string format_name = "human";
    std::string mode_name;
    std::string n_text, limit_text;
    std::vector<std::string> limit_texts;
    unsigned threads = 1;
    u64 segment_size = u64{1} << 22;
    bool brute = false;

    CLI::App* classify = app.add_subcommand("classify", "classify a single n (both modes)");
    classify->add_option("n", n_text, "the number to classify")->required();
    classify->add_option("--format", format_name, "human|json|csv");

    CLI::App* verify = app.add_subcommand("verify", "exhaustively check all n <= limit");
    verify->add_option("--limit", limit_text, "scan bound")->required();
    verify->add_option("--format", format_name, "human|json|csv");
    verify->add_option("--threads", threads, "worker threads");
    verify->add_option("--segment-size", segment_size, "sieve segment entries");

    CLI::App* census = app.add_subcommand("census", "count AP numbers up to a bound");
    census->add_option("--limit", limit_text, "census bound")->required();
    census->add_option("--mode", mode_name, "exclusive|inclusive (default inclusive)");
    census->add_option("--format", format_name, "human|json|csv");
    census->add_flag("--brute", brute, "also run the sieve census and cross-check");
    census->add_option("--threads", threads, "worker threads");
    census->add_option("--segment-size", segment_size, "sieve segment entries");

    CLI::App* ratio = app.add_subcommand("ratio-table", "total vs x loglog x / log x per bound");
    ratio->add_option("limits", limit_texts, "increasing bounds, each >= 3")->required();
    ratio->add_option("--mode", mode_name, "exclusive|inclusive (default inclusive)");
    ratio->add_option("--format", format_name, "human|json|csv");

    try {
        app.parse(argc, argv);
        OutputFormat format = parse_format(format_name);
        if (classify->parsed()) {
            return cmd_classify(parse_natural(n_text), format);
        }
        if (verify->parsed()) {
            apdiv::ScanOptions options;
            options.threads = threads;
            options.segment_size = static_cast<std::size_t>(segment_size);
            return cmd_verify(parse_natural(limit_text), format, options);
        }
        if (census->parsed()) {
            apdiv::Mode mode = mode_name.empty() ? apdiv::Mode::Inclusive : parse_mode(mode_name);
            apdiv::CensusOptions options;
            options.threads = threads;
            options.segment_size = static_cast<std::size_t>(segment_size);
            return cmd_census(parse_natural(limit_text), mode, brute, format, options);
        }
        apdiv::Mode mode = mode_name.empty() ? apdiv::Mode::Inclusive : parse_mode(mode_name);
        std::vector<u64> limits;
        for (const std::string& text : limit_texts) limits.push_back(parse_natural(text));
        return cmd_ratio_table(limits, mode, format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const apdiv::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const apdiv::invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
