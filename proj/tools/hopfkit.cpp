// hopfkit command-line front end: structure-file ingestion, command dispatch,
// human- and machine-readable verification reports.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on invalid
// input or usage.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hopfkit/io.hpp"

using namespace hopfkit;

namespace {

struct Output {
    bool machine = false;
    int worst = 0;

    void info(const std::string& key, const std::string& value) {
        if (machine) std::cout << "info " << key << "=" << value << "\n";
        else std::cout << key << ": " << value << "\n";
    }
    void report(const Report& rep) {
        for (const auto& it : rep.items) {
            if (machine) {
                std::cout << "axiom name=" << it.axiom << " ok=" << (it.ok ? 1 : 0);
                if (!it.witness.empty()) std::cout << " witness=\"" << it.witness << "\"";
                std::cout << "\n";
            } else {
                std::cout << "  [" << (it.ok ? "ok" : "FAIL") << "] " << it.axiom;
                if (!it.witness.empty()) std::cout << "  (" << it.witness << ")";
                std::cout << "\n";
            }
            if (!it.ok) worst = std::max(worst, 1);
        }
    }
    void verdict(const std::string& command, bool pass, double ms) {
        if (!pass) worst = std::max(worst, 1);
        if (machine)
            std::cout << "verdict command=" << command << " pass=" << (pass ? 1 : 0)
                      << " elapsed-ms=" << static_cast<long long>(ms) << "\n";
        else
            std::cout << command << ": " << (pass ? "pass" : "FAIL") << " ("
                      << static_cast<long long>(ms) << " ms)\n";
    }
    template <class K>
    void matrix(const std::string& name, const LinMap<K>& m) {
        if (machine) {
            std::cout << "matrix name=" << name << " rows=" << m.rows() << " cols=" << m.cols()
                      << "\n";
        } else {
            std::cout << name << " (" << m.rows() << "x" << m.cols() << "):\n";
        }
        for (Index i = 0; i < m.rows(); ++i) {
            std::cout << (machine ? "row " : "  ");
            for (Index j = 0; j < m.cols(); ++j)
                std::cout << (j ? " " : "") << scalar_to_string(m(i, j));
            std::cout << "\n";
        }
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

RawDoc load(const std::string& path, const std::string& field_flag) {
    RawDoc doc = parse_raw_file(path);
    if (!field_flag.empty()) {
        FieldDesc want;
        if (field_flag == "rational") {
            want = FieldDesc::rationals();
        } else if (field_flag.rfind("gf:", 0) == 0) {
            want = FieldDesc::gf(std::stoull(field_flag.substr(3)));
        } else {
            throw std::invalid_argument("--field must be 'rational' or 'gf:<p>'");
        }
        if (!(want == doc.field))
            throw std::invalid_argument(path + ": field " + doc.field.name() +
                                        " does not match --field " + field_flag);
    }
    return doc;
}

template <class F>
int with_field(const RawDoc& doc, F&& fn) {
    if (doc.field.rational) return fn.template operator()<Rat>();
    return fn.template operator()<Fp>();
}

template <class K>
Report check_by_kind(const RawDoc& doc) {
    const std::string& k = doc.kind;
    if (k == "algebra") return check_structure(read_algebra<K>(doc));
    if (k == "coalgebra") return check_structure(read_coalgebra<K>(doc));
    if (k == "bialgebra") return check_bialgebra(read_bialgebra<K>(doc));
    if (k == "hopf") {
        auto h = read_hopf<K>(doc);
        Report rep = check_bialgebra(h.b);
        rep.merge(check_antipode(h), "");
        if (h.opantipode) rep.merge(check_antipode(h, AntipodeMode::opantipode), "");
        return rep;
    }
    if (k == "module") return check_representation(read_module<K>(doc));
    if (k == "comodule") return check_representation(read_comodule<K>(doc));
    if (k == "yd") return check_representation(read_yd<K>(doc));
    if (k == "hopf-module") return check_representation(read_hopf_module<K>(doc));
    if (k == "injection") return check_injection(read_injection<K>(doc));
    if (k == "ore") return check_ore_datum(read_ore<K>(doc));
    if (k == "bialgebroid") return check_bialgebroid(read_bialgebroid<K>(doc));
    if (k == "pivotal") return check_pivotal_pair(read_pivotal<K>(doc));
    if (k == "rmatrix") {
        auto r = read_rmatrix<K>(doc);
        return check_rmatrix(r);
    }
    if (k == "module-algebra") return check_module_algebra(read_module_algebra<K>(doc));
    if (k == "braided-hopf") return check_braided_hopf(read_braided_hopf<K>(doc));
    throw std::invalid_argument("kind '" + k + "' has no direct check; use a dedicated command");
}

std::vector<Index> parse_dims(const std::string& csv) {
    std::vector<Index> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfkit: exact verification of Hopf-algebraic structure constants"};
    app.require_subcommand(1);
    std::string field_flag, format = "human";
    app.add_option("--field", field_flag, "expected scalar field: rational or gf:<p>");
    app.add_option("--format", format, "output format: human or machine")
        ->check(CLI::IsMember({"human", "machine"}));

    std::string file1, file2, file3, file4, out_path, gens_csv, probe_csv = "1,2";
    long long bound = 100, max_set = 3;
    bool use_flip = false;

    std::string kind_flag;
    auto* c_check = app.add_subcommand("check", "verify the axioms of a structure file");
    c_check->add_option("file", file1)->required();
    c_check->add_option("--kind", kind_flag, "assert the file has this kind");

    auto* c_fusion = app.add_subcommand("fusion", "fusion-operator invertibility and Hopf verdict");
    c_fusion->add_option("file", file1)->required();

    auto* c_antipode = app.add_subcommand("antipode", "recover antipode/opantipode from fusion inverses");
    c_antipode->add_option("file", file1)->required();

    auto* c_tensor = app.add_subcommand("tensor-modules", "tensor two modules over one bialgebra");
    c_tensor->add_option("m", file1)->required();
    c_tensor->add_option("n", file2)->required();

    auto* c_yd = app.add_subcommand("yd", "check a Yetter-Drinfeld module; braid against a module");
    c_yd->add_option("yd-file", file1)->required();
    c_yd->add_option("module", file2);

    auto* c_hm = app.add_subcommand("hopf-module", "check a Hopf module");
    c_hm->add_option("file", file1)->required();

    auto* c_fund = app.add_subcommand("fundamental", "Fundamental Theorem check for a Hopf module");
    c_fund->add_option("file", file1, "hopf-module file whose parent carries an antipode")->required();

    auto* c_ccc = app.add_subcommand("ccc", "induced adjoint-coaction braiding of a Hopf algebra");
    c_ccc->add_option("hopf", file1)->required();
    c_ccc->add_option("module", file2)->required();

    auto* c_cot = app.add_subcommand("cotensor", "cotensor product of two comodules");
    c_cot->add_option("m", file1)->required();
    c_cot->add_option("n", file2)->required();

    auto* c_cross = app.add_subcommand("cross-product", "smash-product algebra of a module algebra");
    c_cross->add_option("file", file1)->required();

    auto* c_bos = app.add_subcommand("bosonise", "bosonisation of a braided Hopf object");
    c_bos->add_option("file", file1)->required();
    c_bos->add_option("--out", out_path, "write the resulting Hopf algebra here");

    auto* c_rad = app.add_subcommand("radford", "decompose along a split bialgebra projection");
    c_rad->add_option("h2", file1)->required();
    c_rad->add_option("h1", file2)->required();
    c_rad->add_option("proj", file3, "linmap file H2 -> H1")->required();
    c_rad->add_option("incl", file4, "linmap file H1 -> H2")->required();

    auto* c_dist = app.add_subcommand("dist-tensor", "compose two Hopf algebras along a distributive law");
    c_dist->add_option("c", file1)->required();
    c_dist->add_option("b", file2)->required();
    c_dist->add_option("lambda", file3, "linmap file B (x) C -> C (x) B");
    c_dist->add_flag("--flip", use_flip, "use the flip distributive law");
    c_dist->add_option("--out", out_path);

    auto* c_rmx = app.add_subcommand("rmatrix", "R-matrix axioms, convolution inverse, Yang-Baxter");
    c_rmx->add_option("file", file1)->required();

    auto* c_aug = app.add_subcommand("augment", "augmentation / left-regular check");
    c_aug->add_option("bialgebra", file1)->required();
    c_aug->add_option("aug", file2, "linmap file 1 x dim")->required();
    c_aug->add_option("--probe-dims", probe_csv);

    auto* c_beta = app.add_subcommand("galois-beta", "Galois map of a bialgebra injection");
    c_beta->add_option("file", file1)->required();

    auto* c_gamma = app.add_subcommand("galois-gamma", "generalized Galois map and fusion inverse");
    c_gamma->add_option("file", file1)->required();
    c_gamma->add_option("--probe-dims", probe_csv);

    auto* c_ore = app.add_subcommand("ore", "Ore-derivation certificates (and lifted action if x given)");
    c_ore->add_option("file", file1)->required();

    auto* c_nat = app.add_subcommand("nat", "classify closure-operator monads on (N0, +)");
    auto* c_nat_classify = c_nat->add_subcommand("classify");
    c_nat_classify->add_option("--gens", gens_csv, "comma-separated generators");
    c_nat_classify->add_option("--set", file1, "natset structure file");
    c_nat_classify->add_option("--bound", bound);

    auto* c_theory = app.add_subcommand("theory", "fusion check for the unary theory of a finite monoid");
    c_theory->add_option("file", file1)->required();
    c_theory->add_option("--max-set", max_set);

    auto* c_piv = app.add_subcommand("pivotal", "check a pivotal pair (or build one from a matrix)");
    c_piv->add_option("file", file1)->required();

    auto* c_alg = app.add_subcommand("algebroid", "bialgebroid and Hopf-algebroid checks");
    auto* a_check = c_alg->add_subcommand("check");
    a_check->add_option("file", file1)->required();
    auto* a_maps = c_alg->add_subcommand("hopf-maps");
    a_maps->add_option("file", file1)->required();
    auto* a_closed = c_alg->add_subcommand("closed");
    a_closed->add_option("file", file1)->required();
    auto* a_ccc = c_alg->add_subcommand("ccc");
    a_ccc->add_option("file", file1)->required();
    auto* a_cross = c_alg->add_subcommand("cross");
    a_cross->add_option("file", file1, "algebroid-yd file (bialgebroid + braided data)")->required();
    auto* a_hm = c_alg->add_subcommand("hopf-module");
    a_hm->add_option("file", file1, "algebroid-hopf-module file")->required();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.machine = (format == "machine");
    Timer timer;

    try {
        if (*c_check) {
            RawDoc doc = load(file1, field_flag);
            if (!kind_flag.empty() && kind_flag != doc.kind)
                throw std::invalid_argument(file1 + ": kind is '" + doc.kind + "', expected '" +
                                            kind_flag + "'");
            if (doc.kind == "monoid") {
                FiniteMonoid m = read_monoid(doc);
                out.info("order", std::to_string(m.order));
                out.info("group", m.is_group() ? "yes" : "no");
                out.verdict("check", true, timer.ms());
            } else if (doc.kind == "natset") {
                auto v = classify_nat_monad(read_natset(doc), bound);
                out.info("monad", v.monad ? "yes" : "no");
                out.info("bimonad", v.bimonad ? "yes" : "no");
                out.info("hopf", v.hopf ? "yes" : "no");
                out.verdict("check", v.bimonad, timer.ms());
            } else {
                return with_field(doc, [&]<class K>() {
                    Report rep = check_by_kind<K>(doc);
                    out.report(rep);
                    out.verdict("check", rep.pass(), timer.ms());
                    return out.worst;
                });
            }
            return out.worst;
        }
        if (*c_fusion) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto b = doc.kind == "hopf" ? read_hopf<K>(doc).b : read_bialgebra<K>(doc);
                auto f = fusion_bundle(b);
                auto v = hopf_classify(b);
                out.info("left-fusion", f.left_inv ? "invertible" : "singular");
                out.info("right-fusion", f.right_inv ? "invertible" : "singular");
                out.info("criterion", v.criterion);
                if (!f.left_inv) {
                    auto w = try_invert(f.left);
                    std::string s;
                    for (Index i = 0; i < w.kernel_witness->size(); ++i)
                        s += (i ? "," : "") + scalar_to_string((*w.kernel_witness)(i));
                    out.info("left-kernel-witness", s);
                }
                out.verdict("fusion", v.left_hopf && v.right_hopf, timer.ms());
                return out.worst;
            });
        }
        if (*c_antipode) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto b = doc.kind == "hopf" ? read_hopf<K>(doc).b : read_bialgebra<K>(doc);
                auto pair = recover_antipodes(b);
                out.info("antipode", pair.antipode ? "present" : "absent");
                out.info("opantipode", pair.opantipode ? "present" : "absent");
                if (pair.antipode) out.matrix("antipode", *pair.antipode);
                if (pair.opantipode) out.matrix("opantipode", *pair.opantipode);
                out.verdict("antipode", pair.antipode.has_value(), timer.ms());
                return out.worst;
            });
        }
        if (*c_tensor) {
            RawDoc d1 = load(file1, field_flag), d2 = load(file2, field_flag);
            return with_field(d1, [&]<class K>() {
                auto m = read_module<K>(d1);
                auto n = read_module<K>(d2);
                auto t = tensor_modules(m.parent, m, n);
                Report rep = check_representation(t);
                out.info("dim", std::to_string(t.dim));
                out.report(rep);
                out.verdict("tensor-modules", rep.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_yd) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto y = read_yd<K>(doc);
                Report rep = check_representation(y);
                out.report(rep);
                if (!file2.empty() && rep.pass()) {
                    auto n = read_module<K>(load(file2, field_flag));
                    out.matrix("braiding", yd_braiding(y, n));
                }
                out.verdict("yd", rep.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_hm) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                Report rep = check_representation(read_hopf_module<K>(doc));
                out.report(rep);
                out.verdict("hopf-module", rep.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_fund) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto hm = read_hopf_module<K>(doc);
                auto h = read_hopf<K>(doc, "parent");
                auto res = fundamental_theorem_check(h, hm);
                out.info("coinvariant-dim", std::to_string(res.coinvariant_dim));
                out.report(res.report);
                out.verdict("fundamental", res.report.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_ccc) {
            RawDoc d1 = load(file1, field_flag), d2 = load(file2, field_flag);
            return with_field(d1, [&]<class K>() {
                auto h = read_hopf<K>(d1);
                auto n = read_module<K>(d2);
                out.matrix("braiding", induced_ccc_braiding(h, n));
                out.verdict("ccc", true, timer.ms());
                return out.worst;
            });
        }
        if (*c_cot) {
            RawDoc d1 = load(file1, field_flag), d2 = load(file2, field_flag);
            return with_field(d1, [&]<class K>() {
                auto m = read_comodule<K>(d1);
                auto n = read_comodule<K>(d2);
                auto res = cotensor(m.parent, m, n);
                out.info("dim", std::to_string(res.dim));
                out.report(res.report);
                out.verdict("cotensor", res.report.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_cross) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto ma = read_module_algebra<K>(doc);
                auto alg = cross_product_algebra(ma);
                Report rep = check_structure(alg);
                out.info("dim", std::to_string(alg.dim));
                out.report(rep);
                out.verdict("cross-product", rep.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_bos) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto a = read_braided_hopf<K>(doc);
                auto h = bosonisation(a.parent, a);
                out.info("dim", std::to_string(h.dim()));
                if (!out_path.empty()) {
                    std::ofstream os(out_path);
                    serialize(os, h, doc.field);
                    out.info("written", out_path);
                }
                out.verdict("bosonise", true, timer.ms());
                return out.worst;
            });
        }
        if (*c_rad) {
            RawDoc d1 = load(file1, field_flag), d2 = load(file2, field_flag);
            RawDoc dp = load(file3, field_flag), di = load(file4, field_flag);
            return with_field(d1, [&]<class K>() {
                auto h2 = read_hopf<K>(d1);
                auto h1 = read_hopf<K>(d2);
                auto res = radford_decompose(h2, h1, read_linmap<K>(dp), read_linmap<K>(di));
                out.info("braided-dim", std::to_string(res.braided.dim));
                out.report(res.report);
                out.verdict("radford", res.report.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_dist) {
            RawDoc d1 = load(file1, field_flag), d2 = load(file2, field_flag);
            return with_field(d1, [&]<class K>() {
                auto c = read_hopf<K>(d1);
                auto b = read_hopf<K>(d2);
                LinMap<K> lambda =
                    use_flip || file3.empty() ? flip_map<K>(b.dim(), c.dim())
                                              : read_linmap<K>(load(file3, field_flag));
                auto res = tensor_via_distributive_law(c, b, lambda);
                out.info("dim", std::to_string(res.dim()));
                if (!out_path.empty()) {
                    std::ofstream os(out_path);
                    serialize(os, res, d1.field);
                    out.info("written", out_path);
                }
                out.verdict("dist-tensor", true, timer.ms());
                return out.worst;
            });
        }
        if (*c_rmx) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto r = read_rmatrix<K>(doc);
                Report rep = check_rmatrix(r);
                out.report(rep);
                out.verdict("rmatrix", rep.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_aug) {
            RawDoc d1 = load(file1, field_flag), d2 = load(file2, field_flag);
            return with_field(d1, [&]<class K>() {
                auto b = read_bialgebra<K>(d1);
                auto res = check_augmentation(b, read_linmap<K>(d2), parse_dims(probe_csv));
                out.info("left-regular", res.left_regular ? "yes" : "no");
                out.report(res.report);
                out.verdict("augment", res.report.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_beta) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto res = galois_beta(read_injection<K>(doc));
                out.report(res.report);
                out.verdict("galois-beta", res.bijective, timer.ms());
                return out.worst;
            });
        }
        if (*c_gamma) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto inj = read_injection<K>(doc);
                auto res = gamma_map(inj);
                out.report(res.report);
                if (res.bijective)
                    for (Index pd : parse_dims(probe_csv)) {
                        auto rep = gamma_fusion_inverse_check(inj, res, trivial_module(inj.b, pd),
                                                              trivial_module(inj.b, 1));
                        out.report(rep);
                    }
                out.verdict("galois-gamma", res.bijective, timer.ms());
                return out.worst;
            });
        }
        if (*c_ore) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto od = read_ore<K>(doc);
                Report rep = check_ore_datum(od);
                out.report(rep);
                bool pass = rep.pass();
                if (pass && doc.has_map("x")) {
                    OreModule<K> m{regular_module(od.b),
                                   typed_map<K>(doc, "x", od.b.dim, od.b.dim)};
                    Report lifted = ore_lifted_action_check(od, m, m);
                    out.report(lifted);
                    pass = pass && lifted.pass();
                }
                out.verdict("ore", pass, timer.ms());
                return out.worst;
            });
        }
        if (*c_nat) {
            IntSet set = !gens_csv.empty()
                             ? IntSet{NumericalSubmonoid([&] {
                                   std::set<nat> g;
                                   for (Index v : parse_dims(gens_csv)) g.insert(v);
                                   return g;
                               }())}
                             : read_natset(load(file1, field_flag));
            auto v = classify_nat_monad(set, bound);
            out.info("monad", v.monad ? "yes" : "no");
            out.info("bimonad", v.bimonad ? "yes" : "no");
            out.info("hopf", v.hopf ? "yes" : "no");
            if (!v.witness.empty()) out.info("witness", v.witness);
            out.verdict("nat", v.hopf, timer.ms());
            return out.worst;
        }
        if (*c_theory) {
            FiniteMonoid m = read_monoid(load(file1, field_flag));
            auto v = theory_fusion_check(m, max_set);
            auto scan = pseudo_constant_scan(m, max_set);
            out.info("hopf", v.hopf ? "yes" : "no");
            if (!v.witness.empty()) out.info("witness", v.witness);
            out.info("pseudo-constants", std::to_string(scan.pseudo_constants.size()));
            out.verdict("theory", v.hopf, timer.ms());
            return out.worst;
        }
        if (*c_piv) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                Report rep = check_pivotal_pair(read_pivotal<K>(doc));
                out.report(rep);
                out.verdict("pivotal", rep.pass(), timer.ms());
                return out.worst;
            });
        }
        if (*c_alg) {
            RawDoc doc = load(file1, field_flag);
            return with_field(doc, [&]<class K>() {
                auto b = read_bialgebroid<K>(doc);
                if (*a_check) {
                    Report rep = check_bialgebroid(b);
                    out.report(rep);
                    out.verdict("algebroid check", rep.pass(), timer.ms());
                } else if (*a_maps) {
                    auto maps = hopf_algebroid_maps(b);
                    out.report(maps.report);
                    out.verdict("algebroid hopf-maps",
                                maps.beta_invertible && maps.theta_invertible, timer.ms());
                } else if (*a_closed) {
                    auto maps = hopf_algebroid_maps(b);
                    auto m = doc.ints.count("module-dim")
                                 ? read_algebroid_module_part<K>(doc, b)
                                 : algebroid_regular_module(b);
                    Report rep = algebroid_closed_actions_check(b, maps, m, m);
                    out.report(rep);
                    out.verdict("algebroid closed", rep.pass(), timer.ms());
                } else if (*a_ccc) {
                    auto maps = hopf_algebroid_maps(b);
                    auto m = doc.ints.count("module-dim")
                                 ? read_algebroid_module_part<K>(doc, b)
                                 : algebroid_regular_module(b);
                    auto res = algebroid_induced_ccc(b, maps, m);
                    out.info("coalgebra-dim", std::to_string(res.q.dim));
                    out.report(res.report);
                    out.verdict("algebroid ccc", res.report.pass(), timer.ms());
                } else if (*a_cross) {
                    auto maps = hopf_algebroid_maps(b);
                    auto bd = read_algebroid_yd_part<K>(doc, b);
                    auto crossed = algebroid_cross_product(b, maps, bd);
                    out.info("dim", std::to_string(crossed.h_dim));
                    auto cm = hopf_algebroid_maps(crossed);
                    out.report(cm.report);
                    out.verdict("algebroid cross", cm.beta_invertible && cm.theta_invertible,
                                timer.ms());
                } else if (*a_hm) {
                    auto maps = hopf_algebroid_maps(b);
                    auto hm = read_algebroid_hopf_module_part<K>(doc, b);
                    auto res = algebroid_hopf_module_check(b, maps, hm);
                    out.info("coinvariant-dim", std::to_string(res.coinvariant_dim));
                    out.report(res.report);
                    out.verdict("algebroid hopf-module", res.report.pass(), timer.ms());
                } else {
                    throw std::invalid_argument("algebroid needs a subcommand");
                }
                return out.worst;
            });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
