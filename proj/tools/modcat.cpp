// modcat: exact modular-category data for metric groups and twisted doubles
// of finite p-groups. All arithmetic is exact; output is deterministic JSON.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "modcat/groupzoo.hpp"
#include "modcat/json_io.hpp"

using namespace modcat;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), errc::bad_input, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_input, std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        check(out.good(), errc::bad_input, "cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

// Q/Z cocycle -> Z/p^n module cochain (and back) for the lift pipeline.
Cochain qz3_to_module_cochain(const QzCocycle3& w, const AbAction& cmod) {
    long long pn = cmod.module().orders()[0];
    Cochain c(cmod, 3);
    long long n = w.gamma.size();
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long cc = 0; cc < n; ++cc) {
                const RootExponent& q = w.at(a, b, cc);
                check(pn % q.den() == 0, errc::bad_input,
                      "omega exponent outside mu_{p^n}");
                c.set_value(std::vector<long long>{a, b, cc},
                            AbElt{q.num() * (pn / q.den())});
            }
    return c;
}

QzCocycle3 module_cochain3_to_qz(const Cochain& c, const RootExponent& chi_gen) {
    QzCocycle3 w(c.gamma());
    long long n = c.gamma().size();
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long cc = 0; cc < n; ++cc)
                w.at(a, b, cc) = chi_gen.times(c.value(std::vector<long long>{a, b, cc})[0]);
    return w;
}

int run(int argc, char** argv) {
    CLI::App app{"exact modular data for metric groups and twisted doubles"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--output,-o", out_path, "write the JSON result to a file");

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Gauss sum of a metric form");
    std::string gauss_form, gauss_sign = "plus";
    gauss->add_option("--form", gauss_form, "metric group JSON")->required();
    gauss->add_option("--sign", gauss_sign, "plus or minus");

    // witt
    auto* witt = app.add_subcommand("witt", "Witt reduction of a metric form");
    std::string witt_form;
    witt->add_option("--form", witt_form, "metric group JSON")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "Cp criteria on modular data");
    std::string classify_data;
    long long classify_p = 2;
    classify->add_option("--data", classify_data, "modular data JSON")->required();
    classify->add_option("-p", classify_p, "the prime p")->required();

    // pointed
    auto* pointed = app.add_subcommand("pointed", "modular data of a metric group");
    std::string pointed_form;
    bool pointed_fusion = false;
    pointed->add_option("--form", pointed_form, "metric group JSON")->required();
    pointed->add_flag("--fusion", pointed_fusion, "include the fusion tensor");

    // double
    auto* dbl = app.add_subcommand("double", "modular data of a twisted double");
    std::string dbl_group, dbl_omega;
    bool dbl_fusion = false;
    dbl->add_option("--group", dbl_group, "group JSON")->required();
    dbl->add_option("--omega", dbl_omega, "Q/Z-valued 3-cocycle JSON");
    dbl->add_flag("--fusion", dbl_fusion, "include the fusion tensor");

    // lift
    auto* lift = app.add_subcommand("lift", "Shapiro lift of a 3-cocycle");
    std::string lift_gamma, lift_omega;
    long long lift_p = 0, lift_n = 1;
    lift->add_option("--gamma", lift_gamma, "group JSON")->required();
    lift->add_option("-p", lift_p, "prime")->required();
    lift->add_option("-n", lift_n, "coefficient exponent");
    lift->add_option("--omega", lift_omega, "3-cocycle JSON")->required();

    // extend
    auto* extend = app.add_subcommand("extend", "group extension from a lifted cocycle");
    std::string extend_lift;
    extend->add_option("--lift", extend_lift, "output of the lift subcommand")->required();

    // associator
    auto* assoc = app.add_subcommand("associator", "recover the associator of an extension");
    std::string assoc_ext, assoc_omega;
    assoc->add_option("--extension", assoc_ext, "output of lift or extend")->required();
    assoc->add_option("--omega", assoc_omega, "3-cocycle JSON to compare against");

    // obstruct
    auto* obstruct = app.add_subcommand("obstruct", "central extension and obstructions");
    std::string obstruct_oa;
    obstruct->add_option("--outer-action", obstruct_oa, "outer action JSON")->required();

    // heisenberg
    auto* heis = app.add_subcommand("heisenberg", "finite fake Heisenberg model");
    long long heis_p = 0, heis_m = 0;
    heis->add_option("-p", heis_p, "prime")->required();
    heis->add_option("-m", heis_m, "field degree")->required();

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "H^n of a finite group");
    std::string coh_gamma, coh_module;
    long long coh_n = 0;
    coh->add_option("--gamma", coh_gamma, "group JSON")->required();
    coh->add_option("--module", coh_module, "module JSON with optional action")->required();
    coh->add_option("-n", coh_n, "degree")->required();

    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*gauss) {
        MetricGroup m = metric_from_json(load_json(gauss_form));
        check(gauss_sign == "plus" || gauss_sign == "minus", errc::bad_input,
              "--sign must be plus or minus");
        CycloNumber tau = gauss_sum(m, gauss_sign == "plus" ? +1 : -1);
        emit(Json{{"tau", cyclo_to_json(tau)}}, out_path);
    } else if (*witt) {
        MetricGroup m = metric_from_json(load_json(witt_form));
        WittWitness w = witt_reduce(m);
        Json chain = Json::array();
        for (size_t i = 0; i < w.chain.size(); ++i) {
            Json stage;
            stage["isotropic_elements"] = w.chain[i].elements;
            stage["within"] = finab_to_json(w.stages[i].group());
            chain.push_back(stage);
        }
        emit(Json{{"schema", "witt/1"},
                  {"chain", chain},
                  {"residue", metric_to_json(w.residue)},
                  {"verdict", witt_class_name(classify_cp_witt(m))}},
             out_path);
    } else if (*classify) {
        ModularData d = modular_data_from_json(load_json(classify_data));
        CpVerdict v = check_cp_criteria(d, classify_p);
        emit(Json{{"verdict", v.name()}}, out_path);
    } else if (*pointed) {
        MetricGroup m = metric_from_json(load_json(pointed_form));
        ModularData d = pointed_modular_data(m);
        emit(modular_data_to_json(d, pointed_fusion), out_path);
    } else if (*dbl) {
        FiniteGroup g = group_from_json(load_json(dbl_group));
        QzCocycle3 w = dbl_omega.empty() ? QzCocycle3(g)
                                         : qz3_from_json(g, load_json(dbl_omega));
        ModularData d = double_modular_data(g, w);
        if (dbl_fusion) d.fusion = verlinde_fusion(d);
        emit(modular_data_to_json(d, dbl_fusion), out_path);
    } else if (*lift) {
        FiniteGroup gamma = group_from_json(load_json(lift_gamma));
        SESData ses = induced_module_ses(gamma, lift_p, lift_n);
        QzCocycle3 w = qz3_from_json(gamma, load_json(lift_omega));
        Cochain omega = qz3_to_module_cochain(w, ses.sub);
        check(is_cocycle(omega), errc::not_a_cocycle, "omega is not a 3-cocycle");
        Cochain f = shapiro_lift(ses, omega);
        Json out;
        out["schema"] = "shapiro-lift/1";
        out["p"] = lift_p;
        out["n"] = lift_n;
        out["gamma"] = group_to_json(gamma);
        out["f"] = cochain_to_json(f);
        emit(out, out_path);
    } else if (*extend) {
        Json lj = load_json(extend_lift);
        FiniteGroup gamma = group_from_json(lj["gamma"]);
        long long p = lj["p"].get<long long>(), nn = lj["n"].get<long long>();
        SESData ses = induced_module_ses(gamma, p, nn);
        Cochain f = cochain_from_json(ses.quot, 2, lj["f"]);
        Json out;
        out["schema"] = "extension/1";
        out["p"] = p;
        out["n"] = nn;
        out["gamma"] = group_to_json(gamma);
        out["f"] = cochain_to_json(f);
        long long order = ses.quot.module().size() * gamma.size();
        out["order"] = order;
        if (order <= 1024) {
            ExtensionData ext = extension_from_cocycle(ses.quot, f);
            out["table"] = group_to_json(ext.total)["table"];
        }
        emit(out, out_path);
    } else if (*assoc) {
        Json ej = load_json(assoc_ext);
        FiniteGroup gamma = group_from_json(ej["gamma"]);
        long long p = ej["p"].get<long long>(), nn = ej["n"].get<long long>();
        SESData ses = induced_module_ses(gamma, p, nn);
        Cochain f = cochain_from_json(ses.quot, 2, ej["f"]);
        CocycleExtension ext = structured_extension(ses.quot, f);
        Cochain omega_prime = associator_from_extension(ext, ses);
        RootExponent chi(1, ses.sub.module().orders()[0]);
        Json out;
        out["schema"] = "associator/1";
        out["omega_prime"] = qz3_to_json(module_cochain3_to_qz(omega_prime, chi));
        if (!assoc_omega.empty()) {
            QzCocycle3 w = qz3_from_json(gamma, load_json(assoc_omega));
            Cochain omega = qz3_to_module_cochain(w, ses.sub);
            auto cmp = cocycle_tests(omega_prime, omega);
            out["cohomologous_to_omega"] = cmp.witness.has_value();
            if (cmp.witness.has_value()) out["witness"] = cochain_to_json(*cmp.witness);
        }
        emit(out, out_path);
    } else if (*obstruct) {
        OuterActionData data = outer_action_from_json(load_json(obstruct_oa));
        CentralExtensionResult ce = central_extension(data);
        auto flift = default_f_lift(data, ce);
        Cochain omega = obstruction_omega(data, ce, flift);
        Cochain beta = beta_obstruction(data, omega);
        auto omega_cmp = cocycle_tests(omega, Cochain(data.loc.n_action(), 3));
        auto beta_cmp = cocycle_tests(beta, Cochain(data.loc.extension.sub, 4));
        Json out;
        out["schema"] = "obstruction/1";
        out["k_gamma"] = group_to_json(ce.k_gamma);
        out["k_over_n"] = finab_to_json(ce.kn);
        out["f"] = cochain_to_json(ce.f);
        out["omega"] = cochain_to_json(omega);
        out["beta"] = cochain_to_json(beta);
        out["omega_trivial"] = omega_cmp.witness.has_value();
        if (omega_cmp.witness.has_value())
            out["omega_witness"] = cochain_to_json(*omega_cmp.witness);
        out["beta_trivial"] = beta_cmp.witness.has_value();
        if (beta_cmp.witness.has_value())
            out["beta_witness"] = cochain_to_json(*beta_cmp.witness);
        emit(out, out_path);
    } else if (*heis) {
        FakeHeisenberg fh = fake_heisenberg(heis_p, heis_m);
        Json out;
        out["schema"] = "heisenberg/1";
        out["order"] = fh.group.size();
        out["table"] = group_to_json(fh.group)["table"];
        out["center"] = fh.center_elements;
        out["radical_field_indices"] = fh.radical;
        out["metric"] = metric_to_json(fh.attached_metric);
        emit(out, out_path);
    } else if (*coh) {
        FiniteGroup gamma = group_from_json(load_json(coh_gamma));
        AbAction mod = action_from_json(gamma, load_json(coh_module));
        CohomologyGroup h = cohomology_group(mod, coh_n);
        emit(Json{{"schema", "cohomology/1"},
                  {"invariant_factors", h.invariant_factors},
                  {"order", h.order()}},
             out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cout << error_to_json(e).dump(2) << "\n";
        return e.code() == errc::bad_input ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        std::cout << Json{{"error", Json{{"code", "BadInput"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 2;
    }
}
