// Command-line surface for grouped random-grid visual cryptography:
// sharing, recovery, exact layered-contrast reports, empirical measurement,
// combination sweeps, and cross-scheme comparison tables.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rgvcs/contrast_empirical.hpp"
#include "rgvcs/contrast_theory.hpp"
#include "rgvcs/errors.hpp"
#include "rgvcs/image.hpp"
#include "rgvcs/shadows.hpp"

namespace fs = std::filesystem;
using namespace rgvcs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitBudget = 3;

std::string fixed6(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

std::uint64_t draw_entropy_seed() {
    std::random_device entropy;
    return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
}

// Resolves a possibly-absent seed; freshly drawn ones are announced so the
// run can be replayed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    const std::uint64_t drawn = draw_entropy_seed();
    std::cout << "seed=" << drawn << "\n";
    return drawn;
}

struct ShareOptions {
    std::string secret_path;
    std::string out_dir = ".";
    int k = 0;
    int n = 0;
    int n_prime = 0;  // 0: defaults to k for grouped
    std::string variant = "grouped";
    std::optional<std::uint64_t> seed;
    int threads = 0;
};

SchemeParams build_params(const std::string& variant, int k, int n, int n_prime) {
    const Variant v = variant_from_name(variant);
    if (v == Variant::grouped) return SchemeParams::grouped(k, n_prime == 0 ? k : n_prime, n);
    return SchemeParams::traditional(v, k, n);
}

int run_share(const ShareOptions& opt) {
    const SchemeParams params = build_params(opt.variant, opt.k, opt.n, opt.n_prime);
    const std::uint64_t seed = resolve_seed(opt.seed);
    const BinaryImage secret = read_pbm_file(opt.secret_path);

    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) throw io_error("cannot create output directory " + opt.out_dir);

    const ShadowSet set = share_image(secret, params, seed, opt.threads);
    for (int i = 1; i <= params.n; ++i)
        write_pbm_file((fs::path(opt.out_dir) / shadow_filename(i)).string(),
                       set.shadows[static_cast<std::size_t>(i - 1)]);
    const ShareManifest manifest = ShareManifest::describe(set, seed);
    const fs::path manifest_path = fs::path(opt.out_dir) / "manifest.txt";
    std::ofstream out(manifest_path, std::ios::trunc);
    if (!out) throw io_error("cannot write " + manifest_path.string());
    out << manifest.to_text();
    if (!out) throw io_error("cannot write " + manifest_path.string());

    std::cout << "wrote " << params.n << " shadows and manifest.txt to " << opt.out_dir << "\n";
    return kExitOk;
}

struct RecoverOptions {
    std::vector<std::string> shadow_paths;
    std::string out_path;
};

int run_recover(const RecoverOptions& opt) {
    std::vector<BinaryImage> shadows;
    shadows.reserve(opt.shadow_paths.size());
    for (const std::string& path : opt.shadow_paths) shadows.push_back(read_pbm_file(path));
    const BinaryImage recovered = recover_image(shadows);
    write_pbm_file(opt.out_path, recovered);
    std::cout << "wrote " << opt.out_path << " (" << recovered.width() << "x"
              << recovered.height() << ")\n";
    return kExitOk;
}

struct TheoryOptions {
    int k = 0;
    int n = 0;
    int n_prime = 0;
    int t = 0;
    std::string engine = "auto";
    std::uint64_t budget = kDefaultBudget;
    std::string format = "table";
};

int run_theory(const TheoryOptions& opt) {
    const SchemeParams params = SchemeParams::grouped(opt.k, opt.n_prime == 0 ? opt.k : opt.n_prime, opt.n);
    const Engine engine = engine_from_name(opt.engine);
    const ContrastBreakdown breakdown = scheme_contrast(params, opt.t, engine, opt.budget);

    if (opt.format == "csv") {
        std::cout << "layer;partition;alpha;beta;alpha_decimal;beta_decimal\n";
        for (std::size_t i = 0; i < breakdown.classes.size(); ++i) {
            const ClassContrast& c = breakdown.classes[i];
            std::cout << i + 1 << ';' << c.partition.to_string() << ';' << c.alpha.to_string()
                      << ';' << c.beta.to_string() << ';' << fixed6(c.alpha.to_double()) << ';'
                      << fixed6(c.beta.to_double()) << "\n";
        }
        std::cout << "gamma;;" << breakdown.gamma.to_string() << ";;"
                  << fixed6(breakdown.gamma.to_double()) << ";\n";
    } else {
        std::cout << "grouped (k=" << params.k << ", n'=" << params.n_prime << ", n=" << params.n
                  << "), t=" << opt.t << ", engine="
                  << engine_name(engine == Engine::automatic
                                     ? (params.n_prime == params.k ? Engine::closed_form
                                                                   : Engine::enumeration)
                                     : engine)
                  << "\n";
        std::printf("%-6s %-12s %-12s %-12s %-10s %-10s\n", "layer", "partition", "alpha", "beta",
                    "alpha~", "beta~");
        for (std::size_t i = 0; i < breakdown.classes.size(); ++i) {
            const ClassContrast& c = breakdown.classes[i];
            std::printf("%-6zu %-12s %-12s %-12s %-10s %-10s\n", i + 1,
                        c.partition.to_string().c_str(), c.alpha.to_string().c_str(),
                        c.beta.to_string().c_str(), fixed6(c.alpha.to_double()).c_str(),
                        fixed6(c.beta.to_double()).c_str());
        }
        std::cout << "Gamma = " << breakdown.gamma.to_string() << " ~ "
                  << fixed6(breakdown.gamma.to_double()) << "\n";
    }
    return kExitOk;
}

struct MeasureOptions {
    std::string secret_path;
    std::vector<std::string> shadow_paths;
    std::string format = "table";
};

int run_measure(const MeasureOptions& opt) {
    const BinaryImage secret = read_pbm_file(opt.secret_path);
    std::vector<BinaryImage> shadows;
    for (const std::string& path : opt.shadow_paths) shadows.push_back(read_pbm_file(path));
    const ContrastMeasurement m = measure_contrast(secret, recover_image(shadows));
    if (opt.format == "csv") {
        std::cout << "t_white;t_black;alpha\n"
                  << fixed6(m.t_white) << ';' << fixed6(m.t_black) << ';' << fixed6(m.alpha)
                  << "\n";
    } else {
        std::cout << "t_white=" << fixed6(m.t_white) << "\n"
                  << "t_black=" << fixed6(m.t_black) << "\n"
                  << "alpha=" << fixed6(m.alpha) << "\n";
    }
    return kExitOk;
}

struct SweepOptions {
    std::string secret_path;
    std::string manifest_path;
    int t = 0;
    std::uint64_t budget = kDefaultBudget;
    std::string format = "csv";
    std::string out_path;  // empty: stdout
};

ShadowSet load_shadow_set(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw io_error("cannot open " + manifest_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const ShareManifest manifest = ShareManifest::parse(std::move(buf).str());

    ShadowSet set;
    set.params = manifest.params;
    set.layout = BitGroupLayout::of(manifest.params);
    const fs::path base = fs::path(manifest_path).parent_path();
    for (const std::string& file : manifest.shadow_files) {
        set.shadows.push_back(read_pbm_file((base / file).string()));
        if (set.shadows.back().height() != manifest.height ||
            set.shadows.back().width() != manifest.width)
            throw io_error("sweep: shadow " + file + " does not match manifest dimensions");
    }
    return set;
}

int run_sweep(const SweepOptions& opt) {
    const BinaryImage secret = read_pbm_file(opt.secret_path);
    const ShadowSet set = load_shadow_set(opt.manifest_path);
    const std::vector<SweepRow> rows = combination_sweep(secret, set, opt.t, opt.budget);

    std::string rendered;
    if (opt.format == "csv") {
        rendered = sweep_csv(rows);
    } else {
        for (const SweepRow& row : rows)
            rendered += combination_label(row.combination) + "  " + row.layer.to_string() + "  " +
                        fixed6(row.alpha) + "\n";
    }
    if (opt.out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(opt.out_path, std::ios::trunc);
        if (!out) throw io_error("cannot write " + opt.out_path);
        out << rendered;
        std::cout << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
    }
    return kExitOk;
}

struct CompareOptions {
    int k = 0;
    int n = 0;
    int n_prime = 0;
    int t_min = 0;
    int t_max = 0;
    int size = 512;
    std::vector<std::string> variants{"grouped", "yan", "shyu"};
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = kDefaultBudget;
    std::string format = "table";
    int threads = 0;
};

// Mean measured contrast over every t-combination, one value per (variant, t).
int run_compare(const CompareOptions& opt) {
    const int t_min = opt.t_min == 0 ? opt.k : opt.t_min;
    const int t_max = opt.t_max == 0 ? opt.n : opt.t_max;
    if (t_min < opt.k || t_max > opt.n || t_min > t_max)
        throw std::invalid_argument("compare: need k <= tmin <= tmax <= n");
    const std::uint64_t seed = opt.seed ? *opt.seed : draw_entropy_seed();
    const BinaryImage secret = make_half_plane(opt.size, opt.size);

    std::vector<std::vector<double>> table;
    for (const std::string& name : opt.variants) {
        const SchemeParams params = build_params(name, opt.k, opt.n, opt.n_prime);
        const ShadowSet set = share_image(secret, params, seed, opt.threads);
        std::vector<double> means;
        for (int t = t_min; t <= t_max; ++t) {
            const std::vector<SweepRow> rows = combination_sweep(secret, set, t, opt.budget);
            double sum = 0.0;
            for (const SweepRow& row : rows) sum += row.alpha;
            means.push_back(sum / static_cast<double>(rows.size()));
        }
        table.push_back(std::move(means));
    }

    if (opt.format == "csv") {
        std::cout << "# seed=" << seed << "\n";
        std::cout << "variant;t;alpha\n";
        for (std::size_t v = 0; v < opt.variants.size(); ++v)
            for (int t = t_min; t <= t_max; ++t)
                std::cout << opt.variants[v] << ';' << t << ';'
                          << fixed6(table[v][static_cast<std::size_t>(t - t_min)]) << "\n";
    } else {
        std::cout << "k=" << opt.k << " n=" << opt.n << " size=" << opt.size << " seed=" << seed
                  << "\n";
        std::printf("%-10s", "variant");
        for (int t = t_min; t <= t_max; ++t) std::printf(" t=%-8d", t);
        std::printf("\n");
        for (std::size_t v = 0; v < opt.variants.size(); ++v) {
            std::printf("%-10s", opt.variants[v].c_str());
            for (double alpha : table[v]) std::printf(" %-10s", fixed6(alpha).c_str());
            std::printf("\n");
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grouped random-grid visual cryptography toolkit"};
    app.require_subcommand(1);

    ShareOptions share_opt;
    CLI::App* share = app.add_subcommand("share", "split a secret image into shadow images");
    share->add_option("secret", share_opt.secret_path, "secret image (PBM P1/P4)")->required();
    share->add_option("--k", share_opt.k, "recovery threshold")->required();
    share->add_option("--n", share_opt.n, "number of shadows")->required();
    share->add_option("--nprime", share_opt.n_prime, "group length (grouped; default k)");
    share->add_option("--variant", share_opt.variant,
                      "grouped|yan|shyu|wu-sun|chen-tsao (default grouped)");
    share->add_option("--seed", share_opt.seed, "RNG seed (default: system entropy, printed)");
    share->add_option("--out", share_opt.out_dir, "output directory (default .)");
    share->add_option("--threads", share_opt.threads, "worker threads (0 = auto)");

    RecoverOptions recover_opt;
    CLI::App* recover = app.add_subcommand("recover", "stack shadow images by pixel-wise OR");
    recover->add_option("shadows", recover_opt.shadow_paths, "shadow images")->required();
    recover->add_option("--out", recover_opt.out_path, "output PBM path")->required();

    TheoryOptions theory_opt;
    CLI::App* theory = app.add_subcommand("theory", "exact layered-contrast breakdown");
    theory->add_option("--k", theory_opt.k, "recovery threshold")->required();
    theory->add_option("--n", theory_opt.n, "number of shadows")->required();
    theory->add_option("--nprime", theory_opt.n_prime, "group length (default k)");
    theory->add_option("--t", theory_opt.t, "number of stacked shadows")->required();
    theory->add_option("--engine", theory_opt.engine, "auto|closed|enumerated");
    theory->add_option("--budget", theory_opt.budget, "max enumeration states");
    theory->add_option("--format", theory_opt.format, "table|csv");

    MeasureOptions measure_opt;
    CLI::App* measure = app.add_subcommand("measure", "measure contrast of stacked shadows");
    measure->add_option("--secret", measure_opt.secret_path, "secret image")->required();
    measure->add_option("shadows", measure_opt.shadow_paths, "shadow images")->required();
    measure->add_option("--format", measure_opt.format, "table|csv");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "contrast of every t-combination");
    sweep->add_option("--secret", sweep_opt.secret_path, "secret image")->required();
    sweep->add_option("--manifest", sweep_opt.manifest_path, "manifest.txt of a shadow set")
        ->required();
    sweep->add_option("--t", sweep_opt.t, "combination size")->required();
    sweep->add_option("--budget", sweep_opt.budget, "max combinations");
    sweep->add_option("--format", sweep_opt.format, "csv|table");
    sweep->add_option("--out", sweep_opt.out_path, "output file (default stdout)");

    CompareOptions compare_opt;
    CLI::App* compare = app.add_subcommand("compare", "empirical contrast across variants");
    compare->add_option("--k", compare_opt.k, "recovery threshold")->required();
    compare->add_option("--n", compare_opt.n, "number of shadows")->required();
    compare->add_option("--nprime", compare_opt.n_prime, "group length for grouped (default k)");
    compare->add_option("--tmin", compare_opt.t_min, "first t (default k)");
    compare->add_option("--tmax", compare_opt.t_max, "last t (default n)");
    compare->add_option("--size", compare_opt.size, "test secret side length (default 512)");
    compare->add_option("--variants", compare_opt.variants, "variants to compare")
        ->delimiter(',');
    compare->add_option("--seed", compare_opt.seed, "RNG seed (default: system entropy, printed)");
    compare->add_option("--budget", compare_opt.budget, "max combinations per t");
    compare->add_option("--format", compare_opt.format, "table|csv");
    compare->add_option("--threads", compare_opt.threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (share->parsed()) return run_share(share_opt);
        if (recover->parsed()) return run_recover(recover_opt);
        if (theory->parsed()) return run_theory(theory_opt);
        if (measure->parsed()) return run_measure(measure_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
        if (compare->parsed()) return run_compare(compare_opt);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
