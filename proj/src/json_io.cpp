#include "helix/json_io.hpp"

namespace helix {

namespace {

json matrix_rows(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

IMat matrix_from_rows(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix JSON must be a nonempty array of rows");
    IMat m((int)j.size(), (int)j[0].size());
    for (int i = 0; i < m.rows; ++i) {
        if ((int)j[i].size() != m.cols) throw Error("ragged matrix JSON");
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = j[i][c].get<Int>();
    }
    return m;
}

json points(const std::vector<V2>& vs) {
    json out = json::array();
    for (const V2& v : vs) out.push_back(json::array({v.x, v.y}));
    return out;
}

std::vector<V2> points_from(const json& j) {
    std::vector<V2> vs;
    for (const json& p : j) vs.push_back(V2{p[0].get<Int>(), p[1].get<Int>()});
    return vs;
}

}  // namespace

json to_json(const Seed& s) {
    return json{{"rank", s.n()}, {"psi", matrix_rows(s.amb.psi)}, {"basis", matrix_rows(s.basis)}};
}

Seed seed_from_json(const json& j) {
    int n = j.at("rank").get<int>();
    Ambient amb(n, matrix_from_rows(j.at("psi")));
    return Seed(amb, matrix_from_rows(j.at("basis")));
}

json to_json(const Polygon& p) { return json{{"vertices", points(p.normalized_start().vs)}}; }

Polygon polygon_from_json(const json& j) { return Polygon(points_from(j.at("vertices"))).normalized_start(); }

json to_json(const Fan& f) { return json{{"rays", points(f.rays)}}; }

Fan fan_from_json(const json& j) { return Fan(points_from(j.at("rays"))); }

json to_json(const Surface& s) {
    if (s.kind == SurfaceKind::P1xP1) return json{{"kind", "P1xP1"}};
    return json{{"kind", "dP"}, {"m", s.m}};
}

Surface surface_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "P1xP1") return Surface::p1xp1();
    if (kind == "dP") return Surface::blowup_p2(j.at("m").get<int>());
    throw Error("unknown surface kind: " + kind);
}

json to_json(const Surface& s, const KClass& e) {
    (void)s;
    return json{{"r", e.r}, {"c1", e.c1}, {"m", e.m}};
}

KClass kclass_from_json(const Surface& s, const json& j) {
    KClass e;
    e.r = j.at("r").get<Int>();
    e.c1 = j.at("c1").get<Vec>();
    e.m = j.at("m").get<Int>();
    if ((int)e.c1.size() != s.rho()) throw Error("c1 has wrong rank for the surface");
    return e;
}

json to_json(const Collection& c) {
    json objs = json::array();
    for (const KClass& e : c.objs) objs.push_back(to_json(c.S, e));
    return json{{"surface", to_json(c.S)}, {"objects", objs}};
}

Collection collection_from_json(const json& j) {
    Collection c;
    c.S = surface_from_json(j.at("surface"));
    for (const json& o : j.at("objects")) c.objs.push_back(kclass_from_json(c.S, o));
    return c;
}

json to_json(const Trace& t) {
    json out = json::array();
    for (const TraceOp& op : t) {
        switch (op.kind) {
            case TraceOp::Rotate:
                out.push_back(json{{"op", "rotate"}, {"k", op.k}});
                break;
            case TraceOp::Shift:
                out.push_back(json{{"op", "shift"}, {"k", op.k}});
                break;
            case TraceOp::Reorder:
                out.push_back(json{{"op", "reorder"}, {"i", op.i + 1}, {"j", op.j + 1}});
                break;
            case TraceOp::Tensor:
                out.push_back(json{{"op", "tensor"}, {"c1", op.c1}});
                break;
            case TraceOp::TiltPlus:
                out.push_back(json{{"op", "tilt+"}, {"j", op.j + 1}});
                break;
            case TraceOp::TiltMinus:
                out.push_back(json{{"op", "tilt-"}, {"j", op.j + 1}});
                break;
        }
    }
    return out;
}

Trace trace_from_json(const json& j) {
    Trace t;
    for (const json& o : j) {
        std::string op = o.at("op").get<std::string>();
        if (op == "rotate")
            t.push_back(TraceOp::rotate(o.at("k").get<int>()));
        else if (op == "shift")
            t.push_back(TraceOp::shift(o.at("k").get<int>()));
        else if (op == "reorder")
            t.push_back(TraceOp::reorder(o.at("i").get<int>() - 1, o.at("j").get<int>() - 1));
        else if (op == "tensor")
            t.push_back(TraceOp::tensor(o.at("c1").get<Vec>()));
        else if (op == "tilt+")
            t.push_back(TraceOp::tilt_plus(o.at("j").get<int>() - 1));
        else if (op == "tilt-")
            t.push_back(TraceOp::tilt_minus(o.at("j").get<int>() - 1));
        else
            throw Error("unknown trace op: " + op);
    }
    return t;
}

json to_json(const IMat& m) { return matrix_rows(m); }

IMat imat_from_json(const json& j) { return matrix_from_rows(j); }

json to_json(const OracleReport& r) {
    json items = json::array();
    for (const auto& it : r.items)
        items.push_back(json{{"pair", json::array({it.p, it.q})}, {"lhs", it.lhs}, {"rhs", it.rhs}, {"ok", it.ok}});
    return json{{"ok", r.ok}, {"comparisons", items}};
}

}  // namespace helix
