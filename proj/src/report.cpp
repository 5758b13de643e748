#include "hairy/report.hpp"

#include "hairy/cache.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <set>

namespace hairy {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Expected tables

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Functor parse_functor(const std::string& s) {
    if (s == "H") {
        return Functor::HH;
    }
    if (s == "Omega") {
        return Functor::Omega;
    }
    throw std::invalid_argument("unknown functor '" + s + "' (expected H or Omega)");
}

HopfKind parse_hopf(const std::string& s) {
    if (s == "sym") {
        return HopfKind::Sym;
    }
    if (s == "tensor") {
        return HopfKind::Tensor;
    }
    throw std::invalid_argument("unknown Hopf algebra '" + s + "' (expected sym or tensor)");
}

Parity parse_parity(const std::string& s) {
    if (s.empty()) {
        return Parity::none;
    }
    if (s == "even") {
        return Parity::even;
    }
    if (s == "odd") {
        return Parity::odd;
    }
    throw std::invalid_argument("unknown parity '" + s + "' (expected even or odd)");
}

}  // namespace

ExpectedCell::Kind parse_cell(const std::string& text, std::vector<std::pair<Partition, std::uint64_t>>& entries) {
    entries.clear();
    const auto t = trim(text);
    if (t == "0") {
        return ExpectedCell::Kind::zero;
    }
    if (t == "?") {
        return ExpectedCell::Kind::unknown;
    }
    std::map<Partition, std::uint64_t> acc;
    std::size_t pos = 0;
    while (pos < t.size()) {
        auto next = t.find('+', pos);
        if (next == std::string::npos) {
            next = t.size();
        }
        const auto term = trim(t.substr(pos, next - pos));
        const auto open = term.find('[');
        const auto close = term.find(']');
        if (open == std::string::npos || close == std::string::npos || close != term.size() - 1 || close < open) {
            throw std::invalid_argument("malformed table cell '" + text + "'");
        }
        std::uint64_t mult = 1;
        const auto prefix = trim(term.substr(0, open));
        if (!prefix.empty()) {
            for (char ch : prefix) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    throw std::invalid_argument("malformed multiplicity in '" + text + "'");
                }
            }
            mult = std::stoull(prefix);
        }
        std::vector<int> parts;
        std::string body = term.substr(open + 1, close - open - 1);
        std::size_t p = 0;
        while (p < body.size()) {
            auto comma = body.find(',', p);
            if (comma == std::string::npos) {
                comma = body.size();
            }
            const auto num = trim(body.substr(p, comma - p));
            if (num.empty()) {
                throw std::invalid_argument("malformed partition in '" + text + "'");
            }
            parts.push_back(std::stoi(num));
            p = comma + 1;
        }
        acc[Partition(parts)] += mult;
        pos = next + 1;
    }
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        entries.emplace_back(it->first, it->second);
    }
    return ExpectedCell::Kind::known;
}

std::vector<ExpectedCell> load_expected_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::vector<ExpectedCell> cells;
    try {
        const auto doc = nlohmann::json::parse(in);
        for (const auto& table : doc.at("tables")) {
            const auto caption = table.at("caption").get<std::string>();
            const int rank = table.at("rank").get<int>();
            std::vector<FunctorSpec> columns;
            for (const auto& c : table.at("columns")) {
                FunctorSpec spec;
                spec.functor = parse_functor(c.at("functor").get<std::string>());
                spec.rank = rank;
                spec.hopf = parse_hopf(c.at("hopf").get<std::string>());
                spec.validate();
                columns.push_back(spec);
            }
            for (const auto& row : table.at("rows")) {
                const int degree = row.at("degree").get<int>();
                const auto& texts = row.at("cells");
                if (texts.size() != columns.size()) {
                    throw std::runtime_error("row for degree " + std::to_string(degree) + " in '" + caption +
                                             "' has the wrong number of cells");
                }
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    ExpectedCell cell;
                    cell.caption = caption;
                    cell.spec = columns[i];
                    cell.degree = degree;
                    cell.kind = parse_cell(texts[i].get<std::string>(), cell.entries);
                    cells.push_back(std::move(cell));
                }
                if (row.contains("notes")) {
                    for (const auto& n : row.at("notes")) {
                        const auto col = n.at("column").get<std::size_t>();
                        if (col >= columns.size()) {
                            throw std::runtime_error("note refers to a missing column");
                        }
                        cells[cells.size() - columns.size() + col].note = n.at("text").get<std::string>();
                    }
                }
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed tables file " + path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("malformed tables file " + path + ": " + e.what());
    }
    return cells;
}

// ---------------------------------------------------------------------------
// JSON rendering

namespace {

json entries_json(const std::vector<std::pair<Partition, std::uint64_t>>& entries) {
    json arr = json::array();
    for (const auto& [p, m] : entries) {
        json e;
        e["partition"] = p.parts();
        e["mult"] = m;
        arr.push_back(std::move(e));
    }
    return arr;
}

json spec_fields(const FunctorSpec& spec) {
    json j;
    j["functor"] = to_string(spec.functor);
    j["rank"] = spec.rank;
    j["hopf"] = to_string(spec.hopf);
    if (spec.parity != Parity::none) {
        j["parity"] = to_string(spec.parity);
    }
    return j;
}

}  // namespace

json decomposition_json(const Decomposition& dec) {
    json j = spec_fields(dec.spec);
    j["degree"] = dec.degree;
    j["decomposition"] = entries_json(dec.entries);
    json totals = json::object();
    for (const auto& [m, d] : dec.total_dims) {
        totals[std::to_string(m)] = d;
    }
    j["total_dims"] = std::move(totals);
    j["engine_version"] = engine_version();
    return j;
}

json bounds_json(const Decomposition& dec, const BoundsReport& report) {
    json j = spec_fields(dec.spec);
    j["degree"] = dec.degree;
    j["bound"] = report.bound_name;
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row;
        row["partition"] = r.lambda.parts();
        row["computed"] = r.computed;
        row["bound"] = r.bound;
        row["relation"] = to_string(r.relation);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["violation"] = report.has_violation();
    return j;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct CommonFlags {
    std::string cache_dir;
    int jobs = 0;
};

std::unique_ptr<QuotientCache> make_cache(const CommonFlags& flags) {
    if (flags.cache_dir.empty()) {
        return std::make_unique<QuotientCache>();
    }
    return std::make_unique<QuotientCache>(flags.cache_dir);
}

json diff_json(const std::vector<std::pair<Partition, std::uint64_t>>& expected,
               const std::vector<std::pair<Partition, std::uint64_t>>& computed) {
    std::map<Partition, std::pair<std::uint64_t, std::uint64_t>> both;
    for (const auto& [p, m] : expected) {
        both[p].first = m;
    }
    for (const auto& [p, m] : computed) {
        both[p].second = m;
    }
    json arr = json::array();
    for (auto it = both.rbegin(); it != both.rend(); ++it) {
        if (it->second.first != it->second.second) {
            json d;
            d["partition"] = it->first.parts();
            d["expected"] = it->second.first;
            d["computed"] = it->second.second;
            arr.push_back(std::move(d));
        }
    }
    return arr;
}

int cmd_verify(const std::string& path, int max_degree, const std::string& functor, int rank, const std::string& hopf,
               const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    std::vector<ExpectedCell> cells;
    try {
        cells = load_expected_tables(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    // Empty filter strings match everything.
    auto keep = [&](const ExpectedCell& cell) {
        return cell.degree <= max_degree && (functor.empty() || cell.spec.functor == parse_functor(functor)) &&
               (rank == 0 || cell.spec.rank == rank) && (hopf.empty() || cell.spec.hopf == parse_hopf(hopf));
    };
    auto cache = make_cache(flags);
    DecomposeOptions options;
    options.cache = cache.get();
    options.jobs = flags.jobs;

    json results = json::array();
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t fresh = 0;
    for (const auto& cell : cells) {
        if (!keep(cell)) {
            continue;
        }
        const auto dec = decompose(cell.spec, cell.degree, options);
        json r = spec_fields(cell.spec);
        r["degree"] = cell.degree;
        r["table"] = cell.caption;
        if (cell.kind == ExpectedCell::Kind::unknown) {
            r["status"] = "NEW";
            r["computed"] = entries_json(dec.entries);
            ++fresh;
        } else {
            const bool same = dec.entries == cell.entries;
            r["status"] = same ? "match" : "MISMATCH";
            r["expected"] = entries_json(cell.entries);
            r["computed"] = entries_json(dec.entries);
            if (!same) {
                r["diff"] = diff_json(cell.entries, dec.entries);
                ++mismatches;
            } else {
                ++matches;
            }
        }
        if (!cell.note.empty()) {
            r["note"] = cell.note;
        }
        results.push_back(std::move(r));
    }
    json report;
    report["tables"] = path;
    report["max_degree"] = max_degree;
    report["results"] = std::move(results);
    json summary;
    summary["match"] = matches;
    summary["mismatch"] = mismatches;
    summary["new"] = fresh;
    report["summary"] = std::move(summary);
    report["engine_version"] = engine_version();
    out << report.dump(2) << '\n';
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact presentations of hairy graph homology in ranks 1 to 3", "hairy"};
    app.require_subcommand(1);

    std::string functor;
    int rank = 0;
    std::string hopf;
    int degree = 0;
    std::string parity;
    CommonFlags flags;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", flags.cache_dir, "Directory for persistent quotient-dimension cache");
        sub->add_option("--jobs", flags.jobs, "Worker threads for weight blocks")->check(CLI::PositiveNumber);
    };

    auto* compute = app.add_subcommand("compute", "Decompose one graded piece into GL irreducibles");
    compute->add_option("--functor", functor, "H or Omega")->required()->check(CLI::IsMember({"H", "Omega"}));
    compute->add_option("--rank", rank, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    compute->add_option("--hopf", hopf, "sym or tensor")->required()->check(CLI::IsMember({"sym", "tensor"}));
    compute->add_option("--degree", degree, "Total degree")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--parity", parity, "even or odd (H, rank 3, sym only)")
        ->check(CLI::IsMember({"even", "odd"}));
    add_common(compute);

    std::string against;
    int max_degree = 0;
    auto* verify = app.add_subcommand("verify", "Recompute an expected-tables file and diff");
    verify->add_option("--against", against, "Expected tables JSON")->required();
    verify->add_option("--max-degree", max_degree, "Largest degree to check")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--functor", functor, "Only this functor")->check(CLI::IsMember({"H", "Omega"}));
    verify->add_option("--rank", rank, "Only this rank")->check(CLI::IsMember({1, 2, 3}));
    verify->add_option("--hopf", hopf, "Only this Hopf algebra")->check(CLI::IsMember({"sym", "tensor"}));
    add_common(verify);

    auto* bounds = app.add_subcommand("bounds", "Compare sym multiplicities with the closed-form bounds");
    bounds->add_option("--functor", functor, "H or Omega")->required()->check(CLI::IsMember({"H", "Omega"}));
    bounds->add_option("--rank", rank, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
    bounds->add_option("--hopf", hopf, "sym (the only supported value)")->check(CLI::IsMember({"sym"}));
    bounds->add_option("--degree", degree, "Total degree")->required()->check(CLI::NonNegativeNumber);
    add_common(bounds);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("hairy");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            FunctorSpec spec{parse_functor(functor), rank, parse_hopf(hopf), parse_parity(parity)};
            spec.validate();
            auto cache = make_cache(flags);
            DecomposeOptions options;
            options.cache = cache.get();
            options.jobs = flags.jobs;
            out << decomposition_json(decompose(spec, degree, options)).dump(2) << '\n';
            return 0;
        }
        if (verify->parsed()) {
            return cmd_verify(against, max_degree, functor, rank, hopf, flags, out, err);
        }
        if (bounds->parsed()) {
            FunctorSpec spec{parse_functor(functor), rank, HopfKind::Sym, Parity::none};
            auto cache = make_cache(flags);
            DecomposeOptions options;
            options.cache = cache.get();
            options.jobs = flags.jobs;
            const auto dec = decompose(spec, degree, options);
            const auto report = verify_bounds(dec);
            out << bounds_json(dec, report).dump(2) << '\n';
            return report.has_violation() ? 1 : 0;
        }
    } catch (const DecompositionError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace hairy
