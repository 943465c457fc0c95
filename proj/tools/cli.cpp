#include "cli.hpp"

#include "vbs/birack.hpp"
#include "vbs/diagram.hpp"
#include "vbs/error.hpp"
#include "vbs/io.hpp"
#include "vbs/labeling.hpp"
#include "vbs/module.hpp"
#include "vbs/search.hpp"
#include "vbs/shadow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace vbs::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Config {
    std::string birack, shadow, module, diagram, framing, twist, format = "plain";
    std::string dir, out_dir, kind;
    bool reverse = false, twisted = false, allow_large = false;
    int jobs = 1, q = 5, n = 2;
    std::uint64_t seed = 0, trials = 1000, budget = 20000;
};

/// A file that failed to load; maps to exit code 2.
struct InputError : Error {
    using Error::Error;
};

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string one_based(const std::vector<int>& v, const char* open = "(", const char* close = ")") {
    std::string s = open;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i] + 1);
    return s + close;
}

std::string cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += "(";
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            if (j != i) out += " ";
            out += std::to_string(j + 1);
            seen[j] = true;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string framing_string(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

json to_json(const ModuleDescriptor& d) { return {{"count", d.count}, {"factors", d.factors}}; }

/// Loaded structures plus the hashes of the files they came from.
class Inputs {
public:
    json hashes = json::object();

    std::string text(const std::string& role, const std::string& path) {
        std::string t;
        try {
            t = read_file(path);
        } catch (const ParseError& e) {
            throw InputError(e.what());
        }
        hashes[role] = {{"path", path}, {"fnv1a", fnv1a(t)}};
        return t;
    }

    template <typename F>
    auto parsed(const std::string& role, const std::string& path, F parse) {
        const std::string t = text(role, path);
        try {
            return parse(t);
        } catch (const ParseError& e) {
            throw InputError(path + ": " + e.what());
        } catch (const MalformedCode& e) {
            throw InputError(path + ": " + e.what());
        } catch (const EdgeMultiplicity& e) {
            throw InputError(path + ": " + e.what());
        } catch (const OrientationConflict& e) {
            throw InputError(path + ": " + e.what());
        }
    }

    void load_birack(const Config& c) {
        if (c.birack.empty()) throw CLI::ValidationError("--birack", "a birack file is required");
        const BirackFile f = parsed("birack", c.birack, parse_birack);
        plain_ = birack_from_tables(f.n, f.tables);
        std::optional<Permutation> twist = f.twist;
        if (!c.twist.empty()) twist = parse_twist(c.twist, f.n);
        if (twist) twisted_ = attach_twist(*plain_, *twist);
        if (c.twisted && !twisted_) throw ConstraintViolation("--twisted given but the birack has no twist map");
    }

    void load_shadow(const Config& c) {
        if (c.shadow.empty()) {
            shadow_ = trivial_shadow(view());
            return;
        }
        shadow_ = shadow_from_table(view(), parsed("shadow", c.shadow, parse_shadow));
    }

    void load_module(const Config& c) {
        if (c.module.empty()) throw CLI::ValidationError("--module", "a module file is required");
        spec_ = module_from_blocks(view(), *shadow_, parsed("module", c.module, parse_module));
    }

    Diagram load_diagram(const std::string& role, const std::string& path, bool reverse) {
        Diagram d = parsed(role, path, parse_diagram);
        return reverse ? reverse_orientation(d) : d;
    }

    BirackView view() const { return twisted_ ? BirackView(*twisted_) : BirackView(*plain_); }
    const FiniteBirack& birack() const { return *plain_; }
    const std::optional<TwistedBirack>& twisted() const { return twisted_; }
    const ShadowAction& shadow() const { return *shadow_; }
    bool has_shadow_file() const { return hashes.contains("shadow"); }
    const ModuleSpec& spec() const { return *spec_; }

private:
    static Permutation parse_twist(const std::string& s, int n) {
        std::istringstream in(s);
        Permutation t;
        for (int x; in >> x;) t.push_back(x - 1);
        if (!in.eof() || static_cast<int>(t.size()) != n)
            throw InputError("--twist needs " + std::to_string(n) + " 1-based images");
        return t;
    }

    std::optional<FiniteBirack> plain_;
    std::optional<TwistedBirack> twisted_;
    std::optional<ShadowAction> shadow_;
    std::optional<ModuleSpec> spec_;
};

std::vector<int> parse_framing(const std::string& s, int components, int rank) {
    std::vector<int> w;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            w.push_back(((v % rank) + rank) % rank);
        } catch (const std::logic_error&) {
            throw InputError("bad --framing entry '" + item + "'");
        }
    }
    if (static_cast<int>(w.size()) != components)
        throw DimensionMismatch("--framing has " + std::to_string(w.size()) + " entries but the diagram has " +
                                std::to_string(components) + " components");
    return w;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_check(const Config& c, std::ostream& out) {
    Inputs in;
    in.load_birack(c);
    const FiniteBirack& b = in.birack();
    const KinkData& k = b.kink();
    json j{{"command", "check"}, {"valid", true}, {"inputs", json::object()}};
    std::ostringstream text;
    text << "valid, pi=" << cycles(k.pi) << ", N=" << k.rank << '\n';
    text << "alpha=" << one_based(k.alpha, "[", "]") << '\n';
    text << "biquandle: " << (b.is_biquandle() ? "yes" : "no") << '\n';
    j["n"] = b.size();
    j["pi"] = k.pi;
    j["alpha"] = k.alpha;
    j["rank"] = k.rank;
    j["biquandle"] = b.is_biquandle();
    if (in.twisted()) {
        text << "twist: T=" << one_based(in.twisted()->twist(), "[", "]") << '\n';
        j["twist"] = in.twisted()->twist();
    }
    if (!c.shadow.empty() || !c.module.empty()) {
        in.load_shadow(c);
        text << "shadow: m=" << in.shadow().size() << '\n';
        j["shadow_size"] = in.shadow().size();
    }
    if (!c.module.empty()) {
        in.load_module(c);
        const int families = in.spec().twisted() ? kTwistedFamilies : kVirtualFamilies;
        text << "module: q=" << in.spec().modulus() << (in.spec().twisted() ? " twisted" : "") << ", all "
             << families << " relation families vanish\n";
        j["modulus"] = in.spec().modulus();
        j["module_twisted"] = in.spec().twisted();
    }
    j["inputs"] = in.hashes;
    if (c.format == "json")
        print(out, j);
    else
        out << text.str();
    return kOk;
}

int cmd_count(const Config& c, std::ostream& out) {
    Inputs in;
    in.load_birack(c);
    in.load_shadow(c);
    if (c.diagram.empty()) throw CLI::ValidationError("--diagram", "a diagram file is required");
    const Diagram d = in.load_diagram("diagram", c.diagram, c.reverse);
    const BirackView b = in.view();
    const int rank = b.base().rank();

    std::vector<FramingCount> counts;
    std::uint64_t shadowed = 0;
    if (!c.framing.empty()) {
        const auto w = parse_framing(c.framing, d.component_count(), rank);
        const Diagram framed = add_kinks(d, w);
        counts.push_back({w, enumerate_x_labelings(framed, b).size()});
        if (in.has_shadow_file()) shadowed = enumerate_shadow_labelings(framed, b, in.shadow()).size();
    } else {
        counts = framing_counts(d, b, c.jobs);
        if (in.has_shadow_file()) shadowed = phi_shadow_integral(d, b, in.shadow(), c.jobs);
    }
    std::uint64_t total = 0;
    for (const auto& f : counts) total += f.count;
    const char* shadow_key = c.framing.empty() ? "phi_Z_shadow" : "shadow_labelings";

    if (c.format == "json") {
        json j{{"command", "count"}, {"inputs", in.hashes}, {"rank", rank}, {"framings", json::array()}};
        for (const auto& f : counts) j["framings"].push_back({{"framing", f.framing}, {"count", f.count}});
        j[c.framing.empty() ? "phi_Z" : "phi_B"] = total;
        if (in.has_shadow_file()) j[shadow_key] = shadowed;
        print(out, j);
        return kOk;
    }
    for (const auto& f : counts) out << "framing " << framing_string(f.framing) << ": " << f.count << '\n';
    if (c.framing.empty()) out << "phi_Z = " << total << '\n';
    if (in.has_shadow_file()) out << shadow_key << " = " << shadowed << '\n';
    return kOk;
}

ModuleInvariant compute_invariant(const Config& c, Inputs& in, const Diagram& d) {
    if (c.framing.empty()) return module_invariant(d, in.view(), in.shadow(), in.spec(), c.jobs);
    const auto w = parse_framing(c.framing, d.component_count(), in.birack().rank());
    const Diagram framed = add_kinks(d, w);
    const RegionMap regions = faces(framed);
    ModuleInvariant inv;
    FramingRecord rec{w, {}};
    for (ShadowLabeling& f : enumerate_shadow_labelings(framed, regions, in.view(), in.shadow())) {
        const IntMatrix m = presentation_matrix(framed, regions, f, in.spec());
        rec.labelings.push_back({std::move(f), solution_count(m, std::int64_t{in.spec().modulus()})});
    }
    inv.framings.push_back(std::move(rec));
    return inv;
}

int cmd_invariant(const Config& c, std::ostream& out) {
    Inputs in;
    in.load_birack(c);
    in.load_shadow(c);
    in.load_module(c);
    if (c.diagram.empty()) throw CLI::ValidationError("--diagram", "a diagram file is required");
    const Diagram d = in.load_diagram("diagram", c.diagram, c.reverse);
    const ModuleInvariant inv = compute_invariant(c, in, d);
    const std::string poly = to_string(inv.polynomial());

    if (c.format != "json") {
        out << poly << '\n';
        return kOk;
    }
    json j{{"command", "invariant"}, {"inputs", in.hashes},      {"modulus", in.spec().modulus()},
           {"reversed", c.reverse},  {"polynomial", poly},       {"labelings", inv.labeling_count()},
           {"framings", json::array()}, {"multiset", json::array()}};
    for (const auto& f : inv.framings) {
        json fr{{"framing", f.framing}, {"count", f.labelings.size()}, {"labelings", json::array()}};
        for (const auto& l : f.labelings) {
            json lj{{"edges", json::array()}, {"regions", json::array()}, {"module", to_json(l.descriptor)}};
            for (int x : l.labeling.edges) lj["edges"].push_back(x + 1);
            for (int A : l.labeling.regions) lj["regions"].push_back(A + 1);
            fr["labelings"].push_back(std::move(lj));
        }
        j["framings"].push_back(std::move(fr));
    }
    for (const auto& m : inv.multiset()) j["multiset"].push_back(to_json(m));
    print(out, j);
    return kOk;
}

/// Orders names so that digit runs compare numerically: 4.2 < 4.10.
bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            const std::string na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
            const auto ta = na.find_first_not_of('0'), tb = nb.find_first_not_of('0');
            const std::string sa = ta == std::string::npos ? "" : na.substr(ta);
            const std::string sb = tb == std::string::npos ? "" : nb.substr(tb);
            if (sa.size() != sb.size()) return sa.size() < sb.size();
            if (sa != sb) return sa < sb;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

int cmd_tabulate(const Config& c, std::ostream& out, std::ostream& err) {
    Inputs in;
    in.load_birack(c);
    in.load_shadow(c);
    in.load_module(c);
    if (c.dir.empty() || !fs::is_directory(c.dir)) throw InputError("'" + c.dir + "' is not a directory");

    std::vector<std::pair<std::string, fs::path>> files;
    for (const auto& entry : fs::directory_iterator(c.dir))
        if (entry.is_regular_file()) files.emplace_back(entry.path().stem().string(), entry.path());
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
        return a.first == b.first ? a.second < b.second : natural_less(a.first, b.first);
    });

    std::map<Polynomial, std::vector<std::string>> rows;
    json detail = json::array();
    int status = kOk;
    for (const auto& [name, path] : files) {
        try {
            const Diagram d = in.load_diagram("diagram:" + name, path.string(), c.reverse);
            const Polynomial p = phi_module_poly(d, in.view(), in.shadow(), in.spec(), c.jobs);
            rows[p].push_back(name);
            detail.push_back({{"diagram", name}, {"polynomial", to_string(p)}});
        } catch (const Error& e) {
            err << "skipped " << path.string() << ": " << e.what() << '\n';
            status = std::max(status, dynamic_cast<const InputError*>(&e) ? kIoError : kInvalid);
        }
    }

    if (c.format == "json") {
        json j{{"command", "tabulate"}, {"inputs", in.hashes}, {"rows", json::array()}, {"diagrams", detail}};
        for (const auto& [p, names] : rows) j["rows"].push_back({{"polynomial", to_string(p)}, {"diagrams", names}});
        print(out, j);
        return status;
    }
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, to_string(row.first).size());
    for (const auto& [p, names] : rows) {
        std::string label = to_string(p);
        label.resize(width, ' ');
        out << label << " | ";
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
        out << '\n';
    }
    return status;
}

template <typename T>
void print_rejects(std::ostream& out, const SearchReport<T>& r) {
    out << "trials " << r.trials << ", found " << r.found.size() << '\n';
    std::vector<std::pair<std::string, std::uint64_t>> rejects(r.rejects.begin(), r.rejects.end());
    std::sort(rejects.begin(), rejects.end(), [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
    for (const auto& [why, n] : rejects) out << "rejected " << n << ": " << why << '\n';
}

template <typename T>
json report_json(const char* kind, const SearchReport<T>& r) {
    return {{"command", "search"},
            {"kind", kind},
            {"parameters",
             {{"n", r.parameters.n},
              {"m", r.parameters.m},
              {"q", r.parameters.q},
              {"trials", r.parameters.trials},
              {"seed", r.parameters.seed}}},
            {"trials", r.trials},
            {"found", r.found.size()},
            {"rejects", r.rejects}};
}

/// Writes each structure to out_dir/<stem>-<k>.<ext>, or to `out` when no directory is given.
void emit(const Config& c, std::ostream& out, const std::vector<std::string>& texts, const std::string& stem,
          const std::string& ext, json* j) {
    if (c.out_dir.empty()) {
        if (c.format == "json") {
            (*j)["structures"] = texts;
            return;
        }
        for (const auto& t : texts) out << '\n' << t;
        return;
    }
    fs::create_directories(c.out_dir);
    std::vector<std::string> written;
    for (std::size_t k = 0; k < texts.size(); ++k) {
        char num[16];
        std::snprintf(num, sizeof num, "%03zu", k + 1);
        const fs::path p = fs::path(c.out_dir) / (stem + "-" + num + ext);
        std::ofstream f(p);
        if (!(f << texts[k])) throw InputError("cannot write " + p.string());
        written.push_back(p.string());
    }
    if (c.format == "json")
        (*j)["files"] = written;
    else
        for (const auto& w : written) out << "wrote " << w << '\n';
}

int cmd_search(const Config& c, std::ostream& out) {
    json j;
    std::vector<std::string> texts;
    std::ostringstream summary;
    if (c.kind == "biracks") {
        const auto r = enumerate_biracks(c.n, c.allow_large);
        summary << "search biracks n=" << c.n << '\n';
        print_rejects(summary, r);
        for (const auto& b : r.found) texts.push_back(format_birack(b));
        j = report_json("biracks", r);
        emit(c, summary, texts, "birack", ".birack", &j);
    } else {
        Inputs in;
        in.load_birack(c);
        if (c.kind == "twists") {
            const auto r = enumerate_twists(in.birack());
            summary << "search twists n=" << in.birack().size() << '\n';
            print_rejects(summary, r);
            for (const auto& t : r.found) {
                summary << "T=" << one_based(t.twist(), "[", "]") << '\n';
                texts.push_back(format_birack(t.base(), &t.twist()));
            }
            j = report_json("twists", r);
            j["inputs"] = in.hashes;
            if (!c.out_dir.empty()) emit(c, summary, texts, "twisted", ".birack", &j);
        } else {
            in.load_shadow(c);
            ModuleSearchOptions opt;
            opt.twisted = c.twisted;
            opt.budget = c.budget;
            const auto r = random_modules(in.view(), in.shadow(), c.q, c.trials, c.seed, opt);
            summary << "search modules q=" << c.q << " seed=" << c.seed << (c.twisted ? " twisted" : "") << '\n';
            print_rejects(summary, r);
            for (const auto& m : r.found) texts.push_back(format_module(m));
            j = report_json("modules", r);
            j["inputs"] = in.hashes;
            emit(c, summary, texts, "module", ".module", &j);
        }
    }
    if (c.format == "json")
        print(out, j);
    else
        out << summary.str();
    return kOk;
}

void add_structure_flags(CLI::App* s, Config& c, bool shadow, bool module) {
    s->add_option("--birack", c.birack, "birack file")->check(CLI::ExistingFile);
    s->add_option("--twist", c.twist, "twist map as 1-based images, e.g. \"2 1 3\"");
    s->add_flag("--twisted", c.twisted, "require a twisted birack");
    if (shadow) s->add_option("--shadow", c.shadow, "shadow file (default: one-element shadow)")->check(CLI::ExistingFile);
    if (module) s->add_option("--module", c.module, "module file")->check(CLI::ExistingFile);
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"plain", "json"}));
}

void add_diagram_flags(CLI::App* s, Config& c) {
    s->add_option("--diagram", c.diagram, "diagram file")->check(CLI::ExistingFile);
    s->add_option("--framing", c.framing, "single framing w1,w2,...");
    s->add_flag("--reverse", c.reverse, "reverse the orientation of every component");
    s->add_option("--jobs", c.jobs, "framings computed concurrently")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Virtual birack shadow counting invariants", "vbs"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "validate a birack and optional twist, shadow and module");
    check->add_option("file", c.birack, "birack file")->check(CLI::ExistingFile);
    add_structure_flags(check, c, true, true);

    auto* count = app.add_subcommand("count", "labeling counts per framing and the integral invariants");
    add_structure_flags(count, c, true, false);
    add_diagram_flags(count, c);

    auto* invariant = app.add_subcommand("invariant", "shadow module polynomial of a diagram");
    add_structure_flags(invariant, c, true, true);
    add_diagram_flags(invariant, c);

    auto* tabulate = app.add_subcommand("tabulate", "module polynomial of every diagram in a directory");
    tabulate->add_option("dir", c.dir, "directory of diagram files")->required();
    add_structure_flags(tabulate, c, true, true);
    tabulate->add_flag("--reverse", c.reverse, "reverse every diagram");
    tabulate->add_option("--jobs", c.jobs, "framings computed concurrently")->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "search for twists, modules or biracks");
    search->add_option("kind", c.kind, "twists | modules | biracks")
        ->required()
        ->check(CLI::IsMember({"twists", "modules", "biracks"}));
    add_structure_flags(search, c, true, false);
    search->add_option("--q", c.q, "module modulus")->check(CLI::Range(2, 1 << 20));
    search->add_option("--trials", c.trials, "module search trials");
    search->add_option("--seed", c.seed, "module search seed");
    search->add_option("--budget", c.budget, "search nodes per trial");
    search->add_option("--n", c.n, "birack size for biracks")->check(CLI::Range(1, 8));
    search->add_flag("--allow-large", c.allow_large, "permit biracks with n > 3");
    search->add_option("--out", c.out_dir, "directory for found structures");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kIoError;
    }

    try {
        if (*check) return cmd_check(c, out);
        if (*count) return cmd_count(c, out);
        if (*invariant) return cmd_invariant(c, out);
        if (*tabulate) return cmd_tabulate(c, out, err);
        return cmd_search(c, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const AxiomViolation& e) {
        err << "invalid: " << e.axiom() << " fails at " << one_based(e.witness()) << '\n';
        return kInvalid;
    } catch (const RelationViolation& e) {
        err << "invalid: relation generator " << e.generator() << " fails at " << one_based(e.witness()) << '\n';
        return kInvalid;
    } catch (const Error& e) {
        err << "invalid: " << e.what() << '\n';
        return kInvalid;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace vbs::cli
