#include "realhyp/realhyp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace realhyp;

namespace {

struct CliConfig {
    std::string command;
    std::string slot;
    std::string format = "text";
    std::string out;
    std::string catalog;
    double tol = 0;
    bool parallel = false;
    bool quiet = false;
};

std::string pretty(NamedGroup g) {
    switch (g) {
        case NamedGroup::Z2: return "Z/2";
        case NamedGroup::Z4: return "Z/4";
        case NamedGroup::Z6: return "Z/6";
        case NamedGroup::Z2xZ2: return "Z/2×Z/2";
        case NamedGroup::Z4xZ2: return "Z/4×Z/2";
        case NamedGroup::Z2cube: return "(Z/2)^3";
        case NamedGroup::Z3: return "Z/3";
        case NamedGroup::Z3xZ3: return "Z/3×Z/3";
        case NamedGroup::D4: return "D4";
        case NamedGroup::D6: return "D6";
        case NamedGroup::S3: return "S3";
        case NamedGroup::S3xZ3: return "S3×Z/3";
        case NamedGroup::Z2xD4: return "Z/2×D4";
        case NamedGroup::G1: return "G1";
        case NamedGroup::Unknown: return "?";
    }
    return "?";
}

void emit(const CliConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) std::cout << text;
    else write_file(cfg.out, text);
}

std::vector<CatalogSlot> load_catalog(const CliConfig& cfg) {
    if (cfg.catalog.empty()) return builtin_catalog();
    std::ifstream in(cfg.catalog);
    if (!in) throw Error("cannot read " + cfg.catalog);
    std::stringstream ss;
    ss << in.rdbuf();
    return import_catalog_json(ss.str());
}

int cmd_verify(const CliConfig& cfg, const std::vector<CatalogSlot>& catalog) {
    auto rep = verify_all(catalog, cfg.parallel, cfg.tol);
    if (cfg.format == "json") emit(cfg, report_json(rep));
    else if (cfg.format == "csv") emit(cfg, report_csv(rep));
    else if (cfg.format == "md") emit(cfg, report_markdown(rep));
    else emit(cfg, report_text(rep, cfg.quiet));
    if (!rep.ok()) {
        std::cerr << "verify failed: " << rep.failed_assertions.front() << "\n";
        return 1;
    }
    return 0;
}

int cmd_classify(const CliConfig& cfg, const CatalogSlot& slot) {
    std::ostringstream os;
    auto s = build_surface(slot, 0);
    auto d = validate(s, cfg.tol);
    auto fp = fingerprint(s);
    os << "slot " << slot.id << " (" << slot.section << ", " << slot.variants.size() << " variants)\n";
    os << "G=" << pretty(fp.name_holo) << ", Ĝ=" << pretty(fp.name_full) << ", " << (fp.split ? "split" : "non-split")
       << ", S(ℝ)=" << to_string(fp.real_part) << "\n";
    os << "validation: " << (d.ok() ? "ok" : "failed") << "\n";
    for (auto& f : d.failures) os << "  " << f << "\n";
    auto classes = involutive_lift_partition(s);
    auto lifts = antiholomorphic_lifts(s);
    os << "antiholomorphic lifts: " << lifts.size() << ", involutive: ";
    std::size_t inv = 0;
    for (auto& c : classes) inv += c.size();
    os << inv << " in " << classes.size() << " conjugacy classes\n";
    if (classes.empty()) os << "no involutive lifts; S(ℝ)=∅\n";
    for (const auto& c : classes) {
        const auto& r = c.front();
        os << "  " << r << "  nu=(" << nu(r.e) << "," << nu(r.f) << "), class size " << c.size() << "\n";
    }
    auto num = [](int x) { return std::to_string(x); };
    os << "nu multiset on E: {" << join(fp.nu_set_E, num) << "}\n";
    os << "nu multiset on F: {" << join(fp.nu_set_F, num) << "}\n";
    auto rp = analyze_real_part(s);
    for (const auto& cls : rp.classes)
        os << "  component: " << cls.members << " fixed tori, stabilizer " << cls.stabilizer << ", "
           << (cls.klein ? "Klein bottle" : "torus") << "\n";
    os << "fingerprint: " << to_string(fp) << "\n";
    os << "expected S(ℝ)=" << to_string(slot.expected) << (slot.flagged ? " [flagged: " + slot.note + "]" : "") << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_moduli(const CliConfig& cfg) {
    std::ostringstream os;
    bool ok = true;
    for (const auto& c : enumerate_zeta_b()) {
        auto fam = solve_j(c);
        auto chk = verify_family(fam, c, 100, cfg.tol);
        ok = ok && chk.ok;
        os << "Case " << c.label << ": zeta=" << to_string(c.zeta) << " B=" << to_string(c.B) << " (order " << c.order
           << ", " << to_string(c.relation) << ")\n";
        os << "  " << to_string(fam.kind) << ": " << fam.parametrization << "\n";
        os << "  " << fam.branch_rule << "\n";
        os << "  check: " << chk.samples << " samples, exact=" << (chk.exact ? "yes" : "no")
           << ", max residual " << chk.max_residual << ", negation swaps branches: "
           << (chk.negation_swaps ? "yes" : "no") << (chk.ok ? "" : "  FAILED") << "\n";
    }
    auto demo = elliptic_demo();
    auto demo_case = ZetaBCase{"elliptic", zeta::swap, IntMat2{-1, 0, 0, -1}, Relation::Commute, 2};
    auto chk = verify_family(demo, demo_case, 100, cfg.tol);
    ok = ok && chk.ok;
    os << "Real elliptic curve: " << demo.parametrization << "\n  " << demo.note << "\n";
    emit(cfg, os.str());
    return ok ? 0 : 1;
}

int cmd_bdf(const CliConfig& cfg) {
    std::ostringstream os;
    bool ok = true;
    for (const auto& c : bdf_cases()) {
        auto chk = check_bdf(c);
        ok = ok && chk.diagnostics.ok();
        os << "case " << c.number << ": " << c.description << "\n  |G|=" << chk.order
           << " type " << pretty(chk.classified) << ", rotation order " << chk.rotation_order << ", "
           << chk.fixed_points << " fixed points on F, " << (chk.diagnostics.ok() ? "validated" : "FAILED") << "\n";
        for (auto& f : chk.diagnostics.failures) os << "  " << f << "\n";
    }
    emit(cfg, os.str());
    return ok ? 0 : 1;
}

int cmd_export(const CliConfig& cfg, const std::vector<CatalogSlot>& catalog) {
    if (cfg.format == "json") {
        emit(cfg, export_catalog_json(catalog));
        return 0;
    }
    auto rep = verify_all(catalog, cfg.parallel, cfg.tol);
    if (cfg.format == "csv") emit(cfg, report_csv(rep));
    else if (cfg.format == "md") emit(cfg, report_markdown(rep));
    else emit(cfg, report_text(rep, cfg.quiet));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real hyperelliptic surfaces: classification checks"};
    app.require_subcommand(1);
    CliConfig cfg;
    double tol = 0;
    std::vector<CLI::Option*> tol_opts;
    auto common = [&](CLI::App* sub, bool with_slot) {
        if (with_slot) sub->add_option("--slot", cfg.slot, "catalog slot id");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "md", "text"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        tol_opts.push_back(sub->add_option("--tol", tol, "floating tolerance"));
        sub->add_option("--catalog", cfg.catalog, "catalog JSON file instead of the built-in one");
        sub->add_flag("--parallel", cfg.parallel, "verify slots concurrently");
        sub->add_flag("--quiet", cfg.quiet, "summary only");
    };
    auto* verify = app.add_subcommand("verify", "verify the whole catalog");
    auto* classify = app.add_subcommand("classify", "analyze one catalog slot");
    auto* moduli = app.add_subcommand("moduli", "complex structures compatible with (zeta, B)");
    auto* bdf = app.add_subcommand("bdf", "the seven Bagnera-de Franchis actions");
    auto* exp = app.add_subcommand("export", "export catalog (json) or report (csv, md, text)");
    common(verify, false);
    common(classify, true);
    common(moduli, false);
    common(bdf, false);
    common(exp, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    bool tol_given = false;
    for (auto* o : tol_opts) tol_given = tol_given || o->count() > 0;
    if (!tol_given) tol = cfg.command == "moduli" ? 1e-12 : 1e-9;
    if (!(tol > 0)) {
        std::cerr << "--tol must be positive\n";
        return 2;
    }
    cfg.tol = tol;

    try {
        if (cfg.command == "moduli") return cmd_moduli(cfg);
        if (cfg.command == "bdf") return cmd_bdf(cfg);
        auto catalog = load_catalog(cfg);
        if (cfg.command == "classify") {
            if (cfg.slot.empty()) {
                std::cerr << "classify needs --slot\n";
                return 2;
            }
            for (const auto& s : catalog)
                if (s.id == cfg.slot) return cmd_classify(cfg, s);
            std::cerr << "unknown slot: " << cfg.slot << "\n";
            return 2;
        }
        if (cfg.command == "verify") return cmd_verify(cfg, catalog);
        return cmd_export(cfg, catalog);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
