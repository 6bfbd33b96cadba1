// fewdist: bounds and constructions for few-distance sets in the binary
// Hamming space, the binary Johnson space, and the unit sphere.
//
// Subcommands:
//   bound      evaluate absolute/harmonic/LP/combined bounds for one
//              distance set, with an independently re-verified certificate
//   search     run the combined-bound search over admissible distance sets
//   construct  generate a named extremal configuration and its spectrum
//   table      tabulate search results against closed-form values over a range
//   verify     re-check a serialized certificate or point-set file
//
// Space grammar: hamming:<n>, johnson:<n>,<w>, sphere:<n> — sphere n is the
// ambient dimension, so sphere:8 means S^7. Distances are exact strings:
// "p/q" or "a+b√m" (a "sqrt" marker is accepted in place of the radical).

#include "fewdist/bounds.hpp"
#include "fewdist/constructions.hpp"
#include "fewdist/search.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fewdist;

namespace {

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(tok.substr(b, e - b + 1));
    }
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

void emit_report(std::ostream& os, const json& j, const std::string& format) {
    if (format == "json") {
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_structured()) continue;
            os << it.key() << "," << (it->is_string() ? it->get<std::string>() : it->dump())
               << "\n";
        }
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            os << it.key() << " = " << it->dump() << "\n";
    }
}

struct BoundArgs {
    std::string space, distances, format = "json", out;
    int lp_m = 0;
};

int run_bound(const BoundArgs& a) {
    auto sp = Space::parse(a.space);
    if (!sp) return usage_error("bad space spec '" + a.space + "'");
    auto toks = split_list(a.distances);
    if (toks.empty()) return usage_error("no distances given");
    bool quad = false;
    for (const auto& t : toks)
        if (t.find("√") != std::string::npos || t.find("sqrt") != std::string::npos)
            quad = true;
    BoundConfig cfg;
    cfg.lp_m = a.lp_m;
    BoundReport rep;
    try {
        if (quad) {
            std::vector<QuadExt> d;
            for (const auto& t : toks) {
                auto v = QuadExt::parse(t);
                if (!v) return usage_error("unparsable distance '" + t + "'");
                d.push_back(*v);
            }
            rep = combined_bound(DistanceSet<QuadExt>(*sp, d), cfg);
        } else {
            std::vector<Rat> d;
            for (const auto& t : toks) {
                auto v = Rat::parse(t);
                if (!v) return usage_error("unparsable distance '" + t + "'");
                d.push_back(*v);
            }
            rep = combined_bound(DistanceSet<Rat>(*sp, d), cfg);
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    std::ofstream f;
    emit_report(open_out(f, a.out), rep.to_json(), a.format);
    return 0;
}

struct SearchArgs {
    std::string space, format = "json", out;
    int s = 0;
    long grid = 0;
    int lp_m = 0, precision_bits = 256, jobs = 0;
    bool emit_all = false;
    uint64_t seed = 0;
};

int run_search(const SearchArgs& a) {
    auto sp = Space::parse(a.space);
    if (!sp) return usage_error("bad space spec '" + a.space + "'");
    if (a.s < 2) return usage_error("--s must be >= 2");
    SearchConfig cfg;
    cfg.lp_m = a.lp_m;
    cfg.grid_steps = a.grid;
    cfg.precision_bits = a.precision_bits;
    cfg.parallel_width = a.jobs;
    cfg.emit_all_candidates = a.emit_all;
    cfg.seed = a.seed;
    SearchResult res;
    try {
        if (sp->finite()) {
            res = search_finite(*sp, a.s, cfg);
        } else if (a.s == 3) {
            res = search_sphere_s3(sp->n, cfg);
        } else if (a.s == 4) {
            res = search_sphere_s4(sp->n, cfg);
        } else {
            return usage_error("sphere searches support s = 3 or 4");
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    json j = res.to_json();
    if (res.rigor == SearchResult::Rigor::grid_numeric)
        j["caveat"] =
            "grid-numeric: the largest distance was sampled on a finite grid; "
            "per-candidate arithmetic is exact (s=3) or interval-certified (s=4)";
    std::ofstream f;
    emit_report(open_out(f, a.out), j, a.format);
    return 0;
}

struct ConstructArgs {
    std::string name, out, format = "json";
    int n = 0, w = 0, s = 0;
    bool verify = false;
    uint64_t seed = 0;
    bool has_seed = false;
};

int run_construct(const ConstructArgs& a) {
    PointSet ps;
    try {
        std::optional<uint64_t> seed;
        if (a.has_seed) seed = a.seed;
        if (a.name == "hamming-weight-classes") ps = hamming_weight_classes(a.n, a.s);
        else if (a.name == "johnson-prefix") ps = johnson_prefix(a.n, a.w, a.s);
        else if (a.name == "sphere-01") ps = sphere_01(a.n, a.s);
        else if (a.name == "golay23-even") ps = golay23_even();
        else if (a.name == "golay23-weight7") ps = golay23_weight7();
        else if (a.name == "johnson24-lift") ps = johnson24_lift();
        else if (a.name == "e8-half") ps = e8_half(seed);
        else if (a.name == "e8-full") ps = e8_full();
        else if (a.name == "leech-section") ps = leech_section(seed);
        else if (a.name == "golay23") {
            ps.space = Space::hamming(23);
            ps.label = "golay23";
            for (uint32_t c : golay23().codewords) ps.words.push_back(c);
        } else {
            return usage_error("unknown construction '" + a.name + "'");
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) return usage_error("cannot open output file " + a.out);
        write_pointset(f, ps);
    } else if (!a.verify) {
        write_pointset(std::cout, ps);
    }
    if (a.verify) {
        SpectrumReport rep = verify_spectrum(ps);
        json j;
        j["label"] = ps.label;
        j["space"] = ps.space.str();
        j["cardinality"] = rep.cardinality;
        j["s"] = rep.s;
        std::vector<std::string> ds;
        for (const auto& d : rep.distances) ds.push_back(d.str());
        j["distances"] = ds;
        emit_report(std::cout, j, a.format);
    }
    return 0;
}

struct TableArgs {
    std::string theorem, range, format = "plain", out;
    int w = 0, lp_m = 0, jobs = 0;
    long grid = 0;
};

int run_table(const TableArgs& a) {
    size_t dots = a.range.find("..");
    if (dots == std::string::npos) return usage_error("--range wants the form A..B");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(a.range.substr(0, dots));
        hi = std::stoi(a.range.substr(dots + 2));
    } catch (...) {
        return usage_error("bad range '" + a.range + "'");
    }
    if (lo > hi) return usage_error("empty range");

    SearchConfig cfg;
    cfg.lp_m = a.lp_m;
    cfg.grid_steps = a.grid;
    cfg.parallel_width = a.jobs;

    struct Row {
        int n;
        Int upper, lower;
        bool match;
    };
    std::vector<Row> rows;
    try {
        for (int n = lo; n <= hi; ++n) {
            Row row;
            row.n = n;
            if (a.theorem == "hamming-s2") {
                row.upper = search_finite(Space::hamming(n), 2, cfg).upper_bound;
                row.lower = Int(verify_spectrum(hamming_weight_classes(n, 2)).cardinality);
            } else if (a.theorem == "hamming-s3") {
                row.upper = search_finite(Space::hamming(n), 3, cfg).upper_bound;
                row.lower = Int(verify_spectrum(hamming_weight_classes(n, 3)).cardinality);
            } else if (a.theorem == "hamming-s4") {
                row.upper = search_finite(Space::hamming(n), 4, cfg).upper_bound;
                row.lower = Int(verify_spectrum(hamming_weight_classes(n, 4)).cardinality);
            } else if (a.theorem == "johnson-s2" || a.theorem == "johnson-s3" ||
                       a.theorem == "johnson-s4") {
                if (a.w < 1) return usage_error("johnson tables need --w");
                int s = a.theorem.back() - '0';
                row.upper = search_finite(Space::johnson(n, a.w), s, cfg).upper_bound;
                row.lower = Int(verify_spectrum(johnson_prefix(n, a.w, s)).cardinality);
            } else if (a.theorem == "sphere-s3") {
                row.upper = search_sphere_s3(n, cfg).upper_bound;
                row.lower = Int(verify_spectrum(sphere_01(n, 3)).cardinality);
            } else {
                return usage_error("unknown theorem id '" + a.theorem + "'");
            }
            row.match = (row.upper == row.lower);
            rows.push_back(row);
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    std::ofstream f;
    std::ostream& os = open_out(f, a.out);
    if (a.format == "json") {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"n", r.n},
                         {"upper_bound", to_int64(r.upper)},
                         {"construction", to_int64(r.lower)},
                         {"match", r.match}});
        os << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        os << "n,upper_bound,construction,match\n";
        for (const auto& r : rows)
            os << r.n << "," << r.upper.get_str() << "," << r.lower.get_str() << ","
               << (r.match ? "true" : "false") << "\n";
    } else {
        os << a.theorem << (a.w ? " w=" + std::to_string(a.w) : "") << "\n";
        for (const auto& r : rows)
            os << "  n=" << r.n << "  upper=" << r.upper.get_str()
               << "  construction=" << r.lower.get_str() << "  match=" << (r.match ? "yes" : "no")
               << "\n";
    }
    return 0;
}

int run_verify(const std::string& path) {
    std::ifstream f(path);
    if (!f) return usage_error("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return usage_error("empty input file");

    if (text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const std::exception& e) {
            return usage_error(std::string("bad JSON: ") + e.what());
        }
        if (doc.contains("best_candidate")) doc = doc["best_candidate"]["certificate"];
        else if (doc.contains("certificate")) doc = doc["certificate"];
        if (!doc.contains("bound") && doc.contains("lp")) doc["bound"] = doc["lp"];
        if (!doc.contains("f")) {
            std::cout << "no certificate present (harmonic-only report?)\n";
            return 2;
        }
        std::string why;
        if (verify_certificate_json(doc, &why)) {
            std::cout << "certificate ok: bound " << doc["bound"] << " for "
                      << doc["space"].get<std::string>() << "\n";
            return 0;
        }
        std::cout << "certificate MISMATCH: " << why << "\n";
        return 2;
    }

    // point-set file
    std::stringstream in(text);
    try {
        PointSet ps = read_pointset(in);
        size_t declared = 0;
        {
            size_t pos = text.find("points=");
            if (pos != std::string::npos) declared = std::stoul(text.substr(pos + 7));
        }
        SpectrumReport rep = verify_spectrum(ps);
        std::cout << "pointset " << ps.label << ": " << rep.cardinality << " points, " << rep.s
                  << " distances {";
        for (size_t i = 0; i < rep.distances.size(); ++i)
            std::cout << (i ? ", " : "") << rep.distances[i].str();
        std::cout << "}\n";
        if (declared && declared != rep.cardinality) {
            std::cout << "MISMATCH: header declares " << declared << " points\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cout << "pointset MISMATCH: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds and extremal constructions for few-distance sets"};
    app.require_subcommand(1);

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "evaluate bounds for one distance set");
    bound->add_option("--space", ba.space, "hamming:<n> | johnson:<n>,<w> | sphere:<n>")
        ->required();
    bound->add_option("--distances", ba.distances, "comma-separated exact distances")->required();
    bound->add_option("--lp-m", ba.lp_m, "LP truncation (default s+7)");
    bound->add_option("--format", ba.format, "json|csv|plain");
    bound->add_option("--out", ba.out, "write output to file");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "run the combined-bound search");
    search->add_option("--space", sa.space)->required();
    search->add_option("--s", sa.s, "number of distances")->required();
    search->add_option("--grid", sa.grid, "sphere grid steps (default 2000 / 400)");
    search->add_option("--lp-m", sa.lp_m, "LP truncation (default s+7)");
    search->add_option("--precision-bits", sa.precision_bits, "sphere s=4 precision");
    search->add_option("--jobs", sa.jobs, "parallel width (default: hardware)");
    search->add_flag("--emit-all", sa.emit_all, "evaluate every candidate fully");
    search->add_option("--seed", sa.seed);
    search->add_option("--format", sa.format);
    search->add_option("--out", sa.out);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "generate a named construction");
    construct
        ->add_option("--name", ca.name,
                     "hamming-weight-classes | johnson-prefix | sphere-01 | golay23 | "
                     "golay23-even | golay23-weight7 | johnson24-lift | e8-half | e8-full | "
                     "leech-section")
        ->required();
    construct->add_option("--n", ca.n);
    construct->add_option("--w", ca.w);
    construct->add_option("--s", ca.s);
    auto* seedopt = construct->add_option("--seed", ca.seed, "alternative sampling seed");
    construct->add_flag("--verify", ca.verify, "print the verified spectrum report");
    construct->add_option("--out", ca.out, "write the point set to a file");
    construct->add_option("--format", ca.format);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "tabulate search vs construction over a range");
    table
        ->add_option("--theorem", ta.theorem,
                     "hamming-s2|hamming-s3|hamming-s4|johnson-s2|johnson-s3|johnson-s4|sphere-s3")
        ->required();
    table->add_option("--range", ta.range, "n range, e.g. 8..14")->required();
    table->add_option("--w", ta.w, "Johnson weight");
    table->add_option("--grid", ta.grid);
    table->add_option("--lp-m", ta.lp_m);
    table->add_option("--jobs", ta.jobs);
    table->add_option("--format", ta.format);
    table->add_option("--out", ta.out);

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "re-check a certificate or point-set file");
    verify->add_option("--in,input", verify_path, "file to verify")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bound->parsed()) return run_bound(ba);
        if (search->parsed()) return run_search(sa);
        if (construct->parsed()) {
            ca.has_seed = seedopt->count() > 0;
            return run_construct(ca);
        }
        if (table->parsed()) return run_table(ta);
        if (verify->parsed()) return run_verify(verify_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
