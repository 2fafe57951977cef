// pcoh: projective resolutions, Ext and Hochschild cohomology over incidence
// algebras of finite posets, plus cohomology of finite T0 spaces.
//
// Exit codes: 0 ok, 2 malformed input, 3 domain error (not a poset, unknown
// vertex, bad parameters), 4 verification failure / oracle mismatch.

#include "pcoh/bench.hpp"
#include "pcoh/cohomology.hpp"
#include "pcoh/documents.hpp"
#include "pcoh/expanded_complex.hpp"
#include "pcoh/order_complex.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

using nlohmann::json;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw pcoh::parse_error("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

pcoh::Poset::Index resolve_vertex(const pcoh::Poset& p, const std::string& id) {
    auto i = p.index_of(id);
    if (!i) throw std::invalid_argument("no element '" + id + "' in the poset");
    return *i;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void print_dims(std::ostream& os, const std::vector<int>& dims) {
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
    if (dims.empty()) os << "-";
}

int run_resolution(const std::string& input, const std::string& base, const pcoh::FieldSpec& fs,
                   bool verify, bool emit_cycles, bool as_json) {
    auto doc = pcoh::PosetDocument::parse(read_input(input));
    auto p = doc.to_poset();
    auto x = resolve_vertex(p, base);
    return pcoh::with_field(fs, [&](auto field) {
        Timer timer;
        auto r = pcoh::compute_cycles(p, x, field);
        auto t = pcoh::betti(r);
        pcoh::VerifyReport rep;
        if (verify) rep = pcoh::verify_resolution(pcoh::expand_complex(r));
        const double secs = timer.seconds();

        if (as_json) {
            json out;
            out["command"] = "resolution";
            out["field"] = fs.str();
            if (doc.name) out["name"] = *doc.name;
            out["base"] = p.id(x);
            auto& levels = out["levels"] = json::array();
            for (const auto& lvl : r.levels) levels.push_back(lvl.vertex.size());
            out["terminated"] = r.terminated;
            auto& bt = out["betti"] = json::array();
            for (std::size_t i = 0; i < t.level_count(); ++i)
                for (pcoh::Poset::Index v = 0; v < p.size(); ++v)
                    if (t.at(i, v) > 0)
                        bt.push_back({{"level", i}, {"vertex", p.id(v)}, {"count", t.at(i, v)}});
            if (verify)
                out["verify"] = {{"chain", rep.chain_ok},
                                 {"exact", rep.exact_ok},
                                 {"minimal", rep.minimal_ok},
                                 {"augmentation", rep.augmentation_ok}};
            if (emit_cycles) {
                auto& cyc = out["cycles"] = json::array();
                for (std::size_t i = 0; i < r.levels.size(); ++i) {
                    json lvl = {{"level", i}, {"cycles", json::array()}};
                    for (std::size_t j = 0; j < r.levels[i].vertex.size(); ++j) {
                        json one = {{"vertex", p.id(r.levels[i].vertex[j])},
                                    {"boundary", json::array()}};
                        for (std::size_t k = 0; k < r.levels[i].boundary.rows(); ++k)
                            one["boundary"].push_back(field.str(r.levels[i].boundary.at(k, j)));
                        lvl["cycles"].push_back(std::move(one));
                    }
                    cyc.push_back(std::move(lvl));
                }
            }
            out["seconds"] = secs;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "poset: " << p.size() << " elements, " << p.covers().size()
                      << " cover pairs\n";
            std::cout << "base: " << p.id(x) << "   field: " << fs.str() << "\n";
            std::cout << "levels:";
            for (const auto& lvl : r.levels) std::cout << " " << lvl.vertex.size();
            std::cout << (r.terminated ? "   (terminated)" : "   (truncated)") << "\n";
            std::cout << "betti:\n";
            for (std::size_t i = 0; i < t.level_count(); ++i) {
                std::cout << "  level " << i << ":";
                for (pcoh::Poset::Index v = 0; v < p.size(); ++v)
                    if (t.at(i, v) > 0) std::cout << " " << p.id(v) << ":" << t.at(i, v);
                std::cout << "\n";
            }
            if (emit_cycles) {
                std::cout << "cycles:\n";
                for (std::size_t i = 1; i < r.levels.size(); ++i) {
                    std::cout << "  level " << i << ":";
                    for (std::size_t j = 0; j < r.levels[i].vertex.size(); ++j) {
                        std::cout << (j ? " | " : " ") << p.id(r.levels[i].vertex[j]) << " [";
                        for (std::size_t k = 0; k < r.levels[i].boundary.rows(); ++k)
                            std::cout << (k ? " " : "") << field.str(r.levels[i].boundary.at(k, j));
                        std::cout << "]";
                    }
                    std::cout << "\n";
                }
            }
            if (verify)
                std::cout << "verify: chain=" << (rep.chain_ok ? "ok" : "FAIL")
                          << " exact=" << (rep.exact_ok ? "ok" : "FAIL")
                          << " minimal=" << (rep.minimal_ok ? "ok" : "FAIL")
                          << " augmentation=" << (rep.augmentation_ok ? "ok" : "FAIL") << "\n";
            std::cout << "time: " << secs << "s\n";
        }
        if (verify && !rep.all_ok()) return kExitVerify;
        return 0;
    });
}

int run_ext(const std::string& input, const std::string& base, const std::string& target,
            const pcoh::FieldSpec& fs, bool as_json) {
    auto doc = pcoh::PosetDocument::parse(read_input(input));
    auto p = doc.to_poset();
    auto x = resolve_vertex(p, base), b = resolve_vertex(p, target);
    Timer timer;
    auto ext = pcoh::ext_dims(p, x, b, fs);
    const double secs = timer.seconds();
    if (as_json) {
        json out{{"command", "ext"},   {"field", fs.str()},  {"base", p.id(x)},
                 {"target", p.id(b)},  {"dims", ext.dims},   {"seconds", secs}};
        if (doc.name) out["name"] = *doc.name;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ext(" << p.id(x) << " -> " << p.id(b) << ") over " << fs.str() << ": ";
        print_dims(std::cout, ext.dims);
        std::cout << "\ntime: " << secs << "s\n";
    }
    return 0;
}

int run_hh(const std::string& input, const pcoh::FieldSpec& fs, bool oracle, bool as_json) {
    auto doc = pcoh::PosetDocument::parse(read_input(input));
    auto p = doc.to_poset();
    Timer timer;
    auto hh = pcoh::hochschild_dims(p, fs);
    const double secs = timer.seconds();
    bool match = true;
    std::vector<int> oracle_dims;
    if (oracle) {
        oracle_dims = pcoh::simplicial_cohomology_dims(pcoh::order_complex(p), fs);
        for (std::size_t i = 0; i < std::max(oracle_dims.size(), hh.dims.size()); ++i) {
            const int a = i < hh.dims.size() ? hh.dims[i] : 0;
            const int b = i < oracle_dims.size() ? oracle_dims[i] : 0;
            if (a != b) match = false;
        }
    }
    if (as_json) {
        json out{{"command", "hh"},
                 {"field", fs.str()},
                 {"dims", hh.dims},
                 {"star_low", hh.star_low},
                 {"components", p.components().size()},
                 {"seconds", secs}};
        if (doc.name) out["name"] = *doc.name;
        if (oracle) out["oracle"] = {{"dims", oracle_dims}, {"match", match}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "hh over " << fs.str() << ": ";
        print_dims(std::cout, hh.dims);
        std::cout << "\n";
        if (oracle) {
            std::cout << "oracle (order complex): ";
            print_dims(std::cout, oracle_dims);
            std::cout << (match ? "   [match]" : "   [MISMATCH]") << "\n";
        }
        std::cout << "time: " << secs << "s\n";
    }
    return match ? 0 : kExitVerify;
}

int run_space(const std::string& input, const pcoh::FieldSpec& fs, bool as_json) {
    auto doc = pcoh::SpaceDocument::parse(read_input(input));
    auto space = doc.to_space();
    Timer timer;
    auto dims = pcoh::finite_space_cohomology(space, fs);
    const double secs = timer.seconds();
    if (as_json) {
        json out{{"command", "space"},
                 {"field", fs.str()},
                 {"points", space.points.size()},
                 {"opens", space.opens.size()},
                 {"dims", dims},
                 {"seconds", secs}};
        if (doc.name) out["name"] = *doc.name;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "space: " << space.points.size() << " points, " << space.opens.size()
                  << " open sets\n";
        std::cout << "cohomology over " << fs.str() << ": ";
        print_dims(std::cout, dims);
        std::cout << "\ntime: " << secs << "s\n";
    }
    return 0;
}

int run_random(std::size_t n, double prob, std::uint64_t seed, bool as_json) {
    auto doc = pcoh::random_poset_document(n, prob, seed);
    if (as_json)
        std::cout << doc.to_json().dump(2) << "\n";
    else
        std::cout << doc.to_text();
    return 0;
}

int run_bench_cmd(std::size_t count, std::size_t n, std::uint64_t seed, const pcoh::FieldSpec& fs,
                  bool as_json) {
    pcoh::BenchOptions opt;
    opt.count = count;
    opt.n = n;
    opt.seed = seed;
    opt.field = fs;
    auto res = pcoh::run_bench(opt);
    if (as_json) {
        json out{{"command", "bench"},          {"count", count},
                 {"n", n},                      {"seed", seed},
                 {"field", fs.str()},           {"threads", res.threads},
                 {"max_seconds", res.max_seconds},
                 {"mean_seconds", res.mean_seconds},
                 {"median_seconds", res.median_seconds}};
        if (!res.instances.empty()) {
            const auto& s = res.instances[res.slowest];
            out["slowest"] = {{"index", res.slowest}, {"p", s.p}, {"seed", s.seed}, {"hh", s.hh.dims}};
            auto& inst = out["instances"] = json::array();
            for (const auto& i : res.instances)
                inst.push_back({{"p", i.p}, {"seed", i.seed}, {"seconds", i.seconds}, {"hh", i.hh.dims}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "bench: " << count << " posets on " << n << " points, field " << fs.str()
                  << ", threads " << res.threads << "\n";
        std::cout << "max " << res.max_seconds << "s   mean " << res.mean_seconds << "s   median "
                  << res.median_seconds << "s\n";
        if (!res.instances.empty()) {
            const auto& s = res.instances[res.slowest];
            std::cout << "slowest: instance " << res.slowest << " (p=" << s.p << ", seed=" << s.seed
                      << "), hh dims ";
            print_dims(std::cout, s.hh.dims);
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective resolutions and cohomology over incidence algebras of finite posets"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_str = "q";
    bool as_json = false;
    app.add_option("--field", field_str, "coefficient field: q (rationals) or gf:p")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit a JSON result document");

    std::string input = "-", base, target;
    bool verify = false, emit_cycles = false, oracle = false;
    std::size_t rnd_n = 8, bench_count = 100, bench_n = 100;
    double rnd_p = 0.5;
    std::uint64_t rnd_seed = 0, bench_seed = 0;

    auto* cmd_res = app.add_subcommand("resolution", "minimal projective resolution of a simple module");
    cmd_res->add_option("input", input, "poset document (JSON or text), - for stdin");
    cmd_res->add_option("-x,--base", base, "base vertex")->required();
    cmd_res->add_flag("--verify", verify, "expand the complex and verify it is a minimal resolution");
    cmd_res->add_flag("--emit-cycles", emit_cycles, "print every cycle's boundary vector");

    auto* cmd_ext = app.add_subcommand("ext", "dimensions of Ext(S_x, S_b)");
    cmd_ext->add_option("input", input, "poset document (JSON or text), - for stdin");
    cmd_ext->add_option("-x,--base", base, "source vertex")->required();
    cmd_ext->add_option("-b,--target", target, "target vertex")->required();

    auto* cmd_hh = app.add_subcommand("hh", "Hochschild cohomology dimensions of the incidence algebra");
    cmd_hh->add_option("input", input, "poset document (JSON or text), - for stdin");
    cmd_hh->add_flag("--oracle", oracle, "cross-check against order-complex cohomology");

    auto* cmd_space = app.add_subcommand("space", "cohomology of a finite T0 space");
    cmd_space->add_option("input", input, "space document (JSON), - for stdin");

    auto* cmd_rnd = app.add_subcommand("random-poset", "deterministic random poset document");
    cmd_rnd->add_option("-n,--size", rnd_n, "number of elements")->capture_default_str();
    cmd_rnd->add_option("-p,--prob", rnd_p, "relation probability in [0,1]")->capture_default_str();
    cmd_rnd->add_option("--seed", rnd_seed, "generator seed")->capture_default_str();

    auto* cmd_bench = app.add_subcommand("bench", "Hochschild timing sweep over random posets");
    cmd_bench->add_option("--count", bench_count, "number of posets")->capture_default_str();
    cmd_bench->add_option("-n,--size", bench_n, "elements per poset")->capture_default_str();
    cmd_bench->add_option("--seed", bench_seed, "master seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto fs = pcoh::FieldSpec::parse(field_str);
        if (cmd_res->parsed())
            return run_resolution(input, base, fs, verify, emit_cycles, as_json);
        if (cmd_ext->parsed()) return run_ext(input, base, target, fs, as_json);
        if (cmd_hh->parsed()) return run_hh(input, fs, oracle, as_json);
        if (cmd_space->parsed()) return run_space(input, fs, as_json);
        if (cmd_rnd->parsed()) return run_random(rnd_n, rnd_p, rnd_seed, as_json);
        if (cmd_bench->parsed()) return run_bench_cmd(bench_count, bench_n, bench_seed, fs, as_json);
    } catch (const pcoh::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
