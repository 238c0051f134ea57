#include "enriques/json_io.hpp"

namespace enriques::io {

namespace {
const Int kJsonIntMax = (Int(1) << 53) - 1;
}

json int_to_json(const Int& z) {
    if (abs(z) <= kJsonIntMax) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("BadJson", "expected an integer or a decimal string");
}

json rat_to_json(const Rat& q) { return json(rat_to_string(q)); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw Error("BadJson", "expected a rational as \"p/q\" or an integer");
}

json gq_to_json(const GQ& z) { return json::array({rat_to_json(z.re), rat_to_json(z.im)}); }

GQ gq_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("BadJson", "expected [re, im] for a Gaussian rational");
    return GQ(rat_from_json(j[0]), rat_from_json(j[1]));
}

json imat_to_json(const IMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat imat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("BadJson", "expected a nonempty matrix");
    std::size_t rows = j.size(), cols = j[0].size();
    IMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error("BadJson", "ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

json lattice_to_json(const Lattice& l) {
    json out;
    out["rank"] = l.rank();
    out["gram"] = imat_to_json(l.gram());
    if (!l.labels().empty()) out["labels"] = l.labels();
    return out;
}

Lattice lattice_from_json(const json& j) {
    IMat gram = imat_from_json(j.at("gram"));
    if (j.contains("rank") && j["rank"].get<std::size_t>() != gram.rows())
        throw Error("BadJson", "rank does not match the Gram matrix");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Lattice(std::move(gram), std::move(labels));
}

json ivec_to_json(const IVec& v) {
    json coords = json::array();
    for (const Int& x : v) coords.push_back(int_to_json(x));
    return json{{"coords", std::move(coords)}};
}

IVec ivec_from_json(const json& j) {
    const json& coords = j.is_object() ? j.at("coords") : j;
    if (!coords.is_array()) throw Error("BadJson", "expected {\"coords\": [...]}");
    IVec v;
    for (const json& x : coords) v.push_back(int_from_json(x));
    return v;
}

json isometry_to_json(const Isometry& m) { return json{{"matrix", imat_to_json(m.matrix)}}; }

Isometry isometry_from_json(const json& j) { return Isometry{imat_from_json(j.at("matrix"))}; }

json involution_to_json(const ExtendedInvolution& inv) {
    json eps = json::array();
    for (const Int& e : inv.eps()) eps.push_back(int_to_json(e));
    return json{{"m", imat_to_json(inv.matrix())}, {"eps", std::move(eps)}};
}

ExtendedInvolution involution_from_json(const json& j) {
    IMat m = imat_from_json(j.at("m"));
    IVec eps;
    for (const json& e : j.at("eps")) eps.push_back(int_from_json(e));
    return ExtendedInvolution(std::move(m), std::move(eps));
}

json p1_involution_to_json(const P1Involution& f) {
    json mat = json::array({gq_to_json(f.matrix.a), gq_to_json(f.matrix.b),
                            gq_to_json(f.matrix.c), gq_to_json(f.matrix.d)});
    return json{{"matrix", std::move(mat)}, {"anti", f.antiholomorphic}};
}

P1Involution p1_involution_from_json(const json& j) {
    const json& m = j.at("matrix");
    if (!m.is_array() || m.size() != 4)
        throw Error("BadJson", "expected 4 entries [a, b, c, d] for a 2x2 matrix");
    GQMat2 mat{gq_from_json(m[0]), gq_from_json(m[1]), gq_from_json(m[2]), gq_from_json(m[3])};
    bool anti = j.value("anti", true);
    return anti ? P1Involution::antiholo(std::move(mat))
                : P1Involution::holomorphic(std::move(mat));
}

json action_to_json(const QuadricAction& a) {
    json out;
    if (a.is_decomposable()) {
        out["kind"] = "decomposable";
        out["f1"] = p1_involution_to_json(a.factor(1));
        out["f2"] = p1_involution_to_json(a.factor(2));
    } else {
        out["kind"] = "indecomposable";
        const GQMat2& m = a.swap_matrix();
        out["matrix"] = json::array(
            {gq_to_json(m.a), gq_to_json(m.b), gq_to_json(m.c), gq_to_json(m.d)});
    }
    return out;
}

QuadricAction action_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "decomposable")
        return QuadricAction::decomposable(p1_involution_from_json(j.at("f1")),
                                           p1_involution_from_json(j.at("f2")));
    if (kind == "indecomposable") {
        const json& m = j.at("matrix");
        if (!m.is_array() || m.size() != 4)
            throw Error("BadJson", "expected 4 entries for the swap matrix");
        return QuadricAction::indecomposable(
            GQMat2{gq_from_json(m[0]), gq_from_json(m[1]), gq_from_json(m[2]),
                   gq_from_json(m[3])});
    }
    throw Error("BadJson", "kind must be decomposable or indecomposable");
}

json action_report_to_json(const ActionReport& r) {
    json out;
    out["type"] = r.type_id;
    out["surface"] = r.surface;
    out["half1"] = half_topology_name(r.half1);
    out["half2"] = half_topology_name(r.half2);
    if (r.fibers1 == kRulingsSwapped) {
        out["invariant_fibers"] = "swapped";
    } else {
        out["invariant_fibers"] = json::array({r.fibers1, r.fibers2});
    }
    if (r.h2_matrix.rows() == 2) out["h2"] = imat_to_json(r.h2_matrix);
    return out;
}

json branch_to_json(const BranchPolynomial& p) {
    json coeffs = json::array();
    for (const auto& [key, value] : p.coeffs()) {
        coeffs.push_back(json{{"i", key.first},
                              {"j", key.second},
                              {"re", rat_to_json(value.re)},
                              {"im", rat_to_json(value.im)}});
    }
    return json{{"coeffs", std::move(coeffs)}};
}

BranchPolynomial branch_from_json(const json& j) {
    CoeffMap m;
    for (const json& entry : j.at("coeffs")) {
        int i = entry.at("i").get<int>();
        int jj = entry.at("j").get<int>();
        Rat re = entry.contains("re") ? rat_from_json(entry["re"]) : Rat(0);
        Rat im = entry.contains("im") ? rat_from_json(entry["im"]) : Rat(0);
        m[{i, jj}] += GQ(re, im);
    }
    return BranchPolynomial::validate(m);
}

namespace {

json qi_to_json(const QI& x) {
    return json::array({rat_to_json(x.lo), rat_to_json(x.hi)});
}

QI qi_from_json(const json& j) { return QI(rat_from_json(j.at(0)), rat_from_json(j.at(1))); }

}  // namespace

json certificate_to_json(const TorusCertificate& c) {
    json trees = json::array();
    for (const ChartTree& tree : c.trees) {
        json nodes = json::array();
        for (const CertNode& n : tree.nodes) {
            json node{{"t", qi_to_json(n.t)}, {"u", qi_to_json(n.u)}};
            if (n.split_dim < 0) {
                node["bound"] = rat_to_json(n.bound);
            } else {
                node["split"] = n.split_dim;
                node["children"] = json::array({n.child0, n.child1});
            }
            nodes.push_back(std::move(node));
        }
        trees.push_back(json{{"theta_chart", tree.theta_chart},
                             {"phi_chart", tree.phi_chart},
                             {"nodes", std::move(nodes)}});
    }
    return json{{"sign", c.sign}, {"depth", c.depth}, {"boxes", c.boxes},
                {"trees", std::move(trees)}};
}

TorusCertificate certificate_from_json(const json& j) {
    TorusCertificate c;
    c.sign = j.at("sign").get<int>();
    c.depth = j.at("depth").get<int>();
    c.boxes = j.value("boxes", std::size_t{0});
    const json& trees = j.at("trees");
    if (!trees.is_array() || trees.size() != 4)
        throw Error("BadJson", "a certificate carries exactly four chart trees");
    for (std::size_t k = 0; k < 4; ++k) {
        ChartTree& tree = c.trees[k];
        tree.theta_chart = trees[k].at("theta_chart").get<int>();
        tree.phi_chart = trees[k].at("phi_chart").get<int>();
        for (const json& jn : trees[k].at("nodes")) {
            CertNode n;
            n.t = qi_from_json(jn.at("t"));
            n.u = qi_from_json(jn.at("u"));
            if (jn.contains("split")) {
                n.split_dim = jn["split"].get<int>();
                n.child0 = jn.at("children").at(0).get<std::size_t>();
                n.child1 = jn.at("children").at(1).get<std::size_t>();
            } else {
                n.bound = rat_from_json(jn.at("bound"));
            }
            tree.nodes.push_back(std::move(n));
        }
    }
    return c;
}

json sample_to_json(const TorusSample& s) {
    return json{{"theta_chart", s.theta_chart},
                {"phi_chart", s.phi_chart},
                {"theta_t", rat_to_json(s.theta_t)},
                {"phi_t", rat_to_json(s.phi_t)},
                {"value", rat_to_json(s.value)}};
}

json singularity_report_to_json(const SingularityReport& r) {
    json points = json::array();
    for (const SingularPoint& pt : r.points) {
        json p{{"chart", json::array({pt.chart_x, pt.chart_y})}, {"count", pt.count}};
        if (pt.exact) {
            p["x"] = gq_to_json(pt.x);
            p["y"] = gq_to_json(pt.y);
        } else {
            json mod = json::array();
            for (const GQ& c : pt.modulus) mod.push_back(gq_to_json(c));
            p["modulus"] = std::move(mod);
        }
        points.push_back(std::move(p));
    }
    json types = json::array();
    for (const AdeType& t : r.types) types.push_back(t.name());
    return json{{"smooth", r.smooth},
                {"positive_dimensional", r.positive_dimensional},
                {"points", std::move(points)},
                {"types", std::move(types)}};
}

json m0_result_to_json(const M0Result& r) {
    if (const auto* cert = std::get_if<M0Certificate>(&r)) {
        return json{{"member", true},
                    {"sign", cert->torus.sign},
                    {"corners_nonzero", cert->corners_nonzero},
                    {"torus_boxes", cert->torus.boxes},
                    {"min_bound", rat_to_json(cert->torus.min_bound())},
                    {"singularities", singularity_report_to_json(cert->singularities)}};
    }
    const auto& fail = std::get<M0Failure>(r);
    return json{{"member", false},
                {"clause", fail.clause},
                {"detail", fail.detail},
                {"inconclusive", fail.inconclusive}};
}

}  // namespace enriques::io
