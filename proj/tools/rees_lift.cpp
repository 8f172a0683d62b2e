#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reeslift/instance_io.hpp"
#include "reeslift/m2_export.hpp"
#include "reeslift/oracle.hpp"
#include "reeslift/plane_rees.hpp"
#include "reeslift/rees_space.hpp"
#include "reeslift/scroll.hpp"
#include "reeslift/staircase.hpp"

namespace {

using namespace reeslift;

struct Options {
    std::string input, out, field = "rational", format = "text", what = "auto";
    int mu1 = -1, mu2 = -1, d = -1;
    unsigned long long seed = 0;
};

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot open output file " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

FieldSpec parse_field(const std::string& s) {
    if (s == "rational") return FieldSpec::rationals();
    try {
        return FieldSpec::prime(std::stoll(s));
    } catch (const std::exception&) {
        throw ParseError("--field must be \"rational\" or a prime number");
    }
}

template <class F>
int dispatch(const FieldSpec& fs, F&& fn) {
    if (fs.rational) return fn.template operator()<Rational>();
    return fn.template operator()<GFp>();
}

template <class K>
std::string tform(const BinaryForm<K>& f) {
    return form_to_poly(f, VarSpace::t_only()).str();
}

template <class K>
void print_triple(std::ostream& os, const std::string& name,
                  const std::array<BinaryForm<K>, 3>& v) {
    os << name << " = (" << tform(v[0]) << ", " << tform(v[1]) << ", " << tform(v[2]) << ")\n";
}

template <class K>
MuData<K> plane_mu_data(const Options& opt) {
    auto inst = load_instance<K>(opt.input);
    if (!inst.plane) throw ParseError("this command requires a plane-curve instance");
    return compute_mu_data(*inst.plane);
}

int cmd_mu(const Options& opt) {
    return dispatch(peek_field(opt.input), [&]<class K>() {
        auto md = plane_mu_data<K>(opt);
        Output out(opt.out);
        auto& os = out.os();
        print_triple(os, "p", md.p);
        print_triple(os, "q", md.q);
        os << "mu = " << md.mu << "\n";
        print_triple(os, "A", md.A);
        print_triple(os, "B", md.B);
        os << "mu1 = " << md.mu1 << "\n";
        os << "mu2 = " << md.mu2 << "\n";
        os << "alpha = " << tform(md.alpha) << "\n";
        os << "beta = " << tform(md.beta) << "\n";
        return 0;
    });
}

template <class K>
ScrollCurve<K> space_curve_of(const Instance<K>& inst) {
    if (inst.space) return *inst.space;
    if (inst.plane) return compute_mu_data(*inst.plane).scroll_curve();
    throw ParseError("empty instance");
}

int cmd_space_gens(const Options& opt) {
    return dispatch(peek_field(opt.input), [&]<class K>() {
        auto inst = load_instance<K>(opt.input);
        auto sc = space_curve_of(inst);
        auto gens = rees_space_generators(sc);
        Output out(opt.out);
        auto& os = out.os();
        os << "d = " << sc.d << ", mu1 = " << sc.mu1 << ", mu2 = " << sc.mu2 << "\n";
        for (const auto& g : gens.gens)
            os << g.label << " [" << g.provenance << "] bidegree (" << g.bidegree.first << ","
               << g.bidegree.second << "): " << g.poly.str() << "\n";
        os << "count: " << gens.gens.size() << "\n";
        return 0;
    });
}

int cmd_plane_gens(const Options& opt) {
    return dispatch(peek_field(opt.input), [&]<class K>() {
        auto md = plane_mu_data<K>(opt);
        auto fam = dd_family(md);
        Output out(opt.out);
        auto& os = out.os();
        os << "p bidegree (" << md.mu << ",1): " << p_form(md).str() << "\n";
        for (const auto& m : fam.members) {
            os << "member (a,b)=(" << m.a << "," << m.b << ") [" << status_name(m.status) << "]";
            if (m.poly)
                os << " bidegree (" << m.poly->bidegree().first << ","
                   << m.poly->bidegree().second << "): " << m.poly->str();
            os << "\n";
        }
        if (!fam.diagram.warning.empty()) os << "warning: " << fam.diagram.warning << "\n";
        return 0;
    });
}

int cmd_staircase(const Options& opt, std::string* captured = nullptr) {
    auto gens = staircase_min_gens(opt.mu1, opt.mu2, opt.d);
    Output out(opt.out);
    auto& os = out.os();
    for (const auto& g : gens)
        os << "(" << g.i << "," << g.j << "," << g.k << ") s=" << g.s << "\n";
    os << "psi-count: " << psi_count(gens) << "\n";
    (void)captured;
    return 0;
}

int cmd_scroll(const Options& opt) {
    auto basis = scroll_generators<Rational>(opt.mu1, opt.mu2);
    Output out(opt.out);
    auto& os = out.os();
    for (const auto& p : basis.pencils) os << "pencil: " << p.str() << "\n";
    for (const auto& q : basis.quadrics) os << "quadric: " << q.str() << "\n";
    os << "count: " << basis.count() << "\n";
    return 0;
}

void region_text(std::ostream& os, const RegionDiagram& rd) {
    os << "p at (" << rd.p_marker.first << "," << rd.p_marker.second << ")\n";
    os << "q at (" << rd.q_marker.first << "," << rd.q_marker.second << ")\n";
    for (const auto& e : rd.entries)
        os << "(a,b)=(" << e.a << "," << e.b << ") bidegree (" << e.i << "," << e.j << ") "
           << status_name(e.status) << "\n";
    if (!rd.warning.empty()) os << "warning: " << rd.warning << "\n";
}

void region_csv(std::ostream& os, const RegionDiagram& rd) {
    os << "a,b,i,j,status\n";
    for (const auto& e : rd.entries)
        os << e.a << "," << e.b << "," << e.i << "," << e.j << "," << status_name(e.status)
           << "\n";
}

void region_svg(std::ostream& os, const RegionDiagram& rd) {
    int imax = rd.d - rd.mu1 - rd.mu2;
    int jmax = 1;
    for (const auto& e : rd.entries) jmax = std::max(jmax, e.j);
    const int cell = 24, m = 50;
    int w = m * 2 + cell * (imax + 1), h = m * 2 + cell * (jmax + 1);
    auto px = [&](int i) { return m + cell * i; };
    auto py = [&](int j) { return h - m - cell * j; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(imax) << "\" y2=\""
       << py(0) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
       << py(jmax) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(imax) - 40 << "\" y=\"" << py(0) + 30 << "\">T-degree</text>\n";
    os << "<text x=\"" << px(0) - 40 << "\" y=\"" << py(jmax) << "\">Z-grade</text>\n";
    for (const auto& e : rd.entries) {
        bool solid = e.status == RegionStatus::Guaranteed || e.status == RegionStatus::AttemptedOk;
        os << "<circle cx=\"" << px(e.i) << "\" cy=\"" << py(e.j) << "\" r=\"4\" fill=\""
           << (solid ? "black" : "white") << "\" stroke=\"black\"/>\n";
    }
    os << "<circle cx=\"" << px(rd.p_marker.first) << "\" cy=\"" << py(rd.p_marker.second)
       << "\" r=\"5\" fill=\"black\"/>\n";
    os << "<text x=\"" << px(rd.p_marker.first) - 4 << "\" y=\"" << py(rd.p_marker.second) + 20
       << "\">p</text>\n";
    os << "<circle cx=\"" << px(rd.q_marker.first) << "\" cy=\"" << py(rd.q_marker.second)
       << "\" r=\"5\" fill=\"black\"/>\n";
    os << "<text x=\"" << px(rd.q_marker.first) + 6 << "\" y=\"" << py(rd.q_marker.second)
       << "\">q</text>\n";
    os << "</svg>\n";
}

int cmd_region(const Options& opt) {
    return dispatch(peek_field(opt.input), [&]<class K>() {
        auto md = plane_mu_data<K>(opt);
        auto rd = dd_region(md.d(), md.mu1, md.mu2);
        Output out(opt.out);
        auto& os = out.os();
        if (opt.format == "csv")
            region_csv(os, rd);
        else if (opt.format == "svg")
            region_svg(os, rd);
        else
            region_text(os, rd);
        return 0;
    });
}

int cmd_lift_check(const Options& opt) {
    return dispatch(peek_field(opt.input), [&]<class K>() {
        auto md = plane_mu_data<K>(opt);
        auto fam = dd_family(md);
        auto rep = lift_and_check(md, fam);
        Output out(opt.out);
        auto& os = out.os();
        for (const auto& it : rep)
            os << "(a,b)=(" << it.a << "," << it.b << "): " << (it.pass ? "pass" : "fail")
               << "\n";
        os << "checked: " << rep.size() << "\n";
        return 0;
    });
}

int cmd_gen_instance(const Options& opt) {
    FieldSpec fs = parse_field(opt.field);
    return dispatch(fs, [&]<class K>() {
        auto md = generate_instance<K>(opt.d, opt.mu1, opt.mu2, fs, opt.seed);
        Instance<K> inst;
        inst.field = fs;
        inst.kind = "plane-curve";
        inst.plane = md.curve;
        Output out(opt.out);
        out.os() << instance_to_json(inst).dump(2) << "\n";
        return 0;
    });
}

int cmd_export_m2(const Options& opt) {
    return dispatch(peek_field(opt.input), [&]<class K>() {
        auto inst = load_instance<K>(opt.input);
        std::string what = opt.what;
        if (what == "auto") what = inst.space ? "space-gens" : "plane-gens";
        Output out(opt.out);
        if (what == "space-gens") {
            auto sc = space_curve_of(inst);
            out.os() << m2_space_script(sc, rees_space_generators(sc));
        } else if (what == "plane-gens") {
            if (!inst.plane) throw ParseError("plane-gens export requires a plane-curve instance");
            auto md = compute_mu_data(*inst.plane);
            out.os() << m2_plane_script(md, dd_family(md));
        } else {
            throw ParseError("--what must be space-gens or plane-gens");
        }
        return 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rees algebra generators for parametric curves"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("--input", opt.input, "instance JSON file")->required();
        sub->add_option("--out", opt.out, "output file (default stdout)");
        return sub;
    };
    auto* mu = add_common(app.add_subcommand("mu", "mu-basis, split basis and decomposition"), true);
    auto* spaceg = add_common(app.add_subcommand("space-gens", "generators of the space-curve ideal"), true);
    auto* planeg = add_common(app.add_subcommand("plane-gens", "operator family for the plane-curve ideal"), true);
    auto* stair = add_common(app.add_subcommand("staircase", "staircase minimal generators"), false);
    stair->add_option("--mu1", opt.mu1)->required();
    stair->add_option("--mu2", opt.mu2)->required();
    stair->add_option("-d", opt.d)->required();
    auto* scr = add_common(app.add_subcommand("scroll", "scroll ideal generators"), false);
    scr->add_option("--mu1", opt.mu1)->required();
    scr->add_option("--mu2", opt.mu2)->required();
    auto* region = add_common(app.add_subcommand("region", "operator region diagram"), true);
    region->add_option("--format", opt.format, "text, csv or svg");
    auto* lift = add_common(app.add_subcommand("lift-check", "verify lifts of the operator family"), true);
    auto* gen = add_common(app.add_subcommand("gen-instance", "generate a random instance"), false);
    gen->add_option("--mu1", opt.mu1)->required();
    gen->add_option("--mu2", opt.mu2)->required();
    gen->add_option("-d", opt.d)->required();
    gen->add_option("--field", opt.field, "rational or a prime");
    gen->add_option("--seed", opt.seed);
    auto* m2 = add_common(app.add_subcommand("export-m2", "emit a Macaulay2 cross-check script"), true);
    m2->add_option("--what", opt.what, "space-gens or plane-gens");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (mu->parsed()) return cmd_mu(opt);
        if (spaceg->parsed()) return cmd_space_gens(opt);
        if (planeg->parsed()) return cmd_plane_gens(opt);
        if (stair->parsed()) return cmd_staircase(opt);
        if (scr->parsed()) return cmd_scroll(opt);
        if (region->parsed()) return cmd_region(opt);
        if (lift->parsed()) return cmd_lift_check(opt);
        if (gen->parsed()) return cmd_gen_instance(opt);
        if (m2->parsed()) return cmd_export_m2(opt);
    } catch (const InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CongruenceFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SPairNonzero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ReesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
