#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "waring/certify.hpp"

// JSON round-trips for every serialized type. Rationals travel as "p/q"
// strings so files stay exact; nlohmann::json orders keys, which makes the
// emitted files byte-reproducible for a fixed seed.

namespace nlohmann {

template <>
struct adl_serializer<mpq_class> {
    static void to_json(json& j, const mpq_class& q) { j = waring::exact::to_string(q); }
    static void from_json(const json& j, mpq_class& q) {
        q = waring::exact::parse_rational(j.get<std::string>());
    }
};

template <typename T>
struct adl_serializer<std::optional<T>> {
    static void to_json(json& j, const std::optional<T>& v) {
        if (v)
            j = *v;
        else
            j = nullptr;
    }
    static void from_json(const json& j, std::optional<T>& v) {
        if (j.is_null())
            v = std::nullopt;
        else
            v = j.get<T>();
    }
};

}  // namespace nlohmann

namespace waring::exact {

inline void to_json(nlohmann::json& j, const SubspaceBasis& s) {
    j = {{"ambient_dim", s.ambient_dim}, {"vectors", s.vectors}};
}
inline void from_json(const nlohmann::json& j, SubspaceBasis& s) {
    j.at("ambient_dim").get_to(s.ambient_dim);
    j.at("vectors").get_to(s.vectors);
}

}  // namespace waring::exact

namespace waring::geom {

inline void to_json(nlohmann::json& j, const ProjPoint& p) {
    j = {{"m", p.m}, {"coords", p.coords}};
}
inline void from_json(const nlohmann::json& j, ProjPoint& p) {
    p = ProjPoint(j.at("m").get<unsigned>(), j.at("coords").get<exact::Vec>());
}

inline void to_json(nlohmann::json& j, const ParamCurve& c) {
    j = {{"kind", c.kind == CurveKind::line ? "line" : "smooth_conic"},
         {"m", c.m},
         {"parametrization", c.param}};
    if (c.line_points)
        j["line_points"] = {c.line_points->first, c.line_points->second};
}
inline void from_json(const nlohmann::json& j, ParamCurve& c) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "line")
        c.kind = CurveKind::line;
    else if (kind == "smooth_conic")
        c.kind = CurveKind::smooth_conic;
    else
        throw std::invalid_argument("unknown curve kind: " + kind);
    j.at("m").get_to(c.m);
    j.at("parametrization").get_to(c.param);
    if (c.param.size() != c.m + 1)
        throw std::invalid_argument("curve parametrization: coordinate count mismatch");
    c.line_points.reset();
    if (j.contains("line_points")) {
        auto pts = j.at("line_points").get<std::vector<ProjPoint>>();
        if (pts.size() != 2) throw std::invalid_argument("line_points: need two points");
        c.line_points = {pts[0], pts[1]};
    }
}

}  // namespace waring::geom

namespace waring::schemes {

inline void to_json(nlohmann::json& j, const CurvComponent& c) {
    j = {{"carrier", c.carrier}, {"t0", c.t0}, {"degree", c.k}};
}
inline void from_json(const nlohmann::json& j, CurvComponent& c) {
    j.at("carrier").get_to(c.carrier);
    j.at("t0").get_to(c.t0);
    j.at("degree").get_to(c.k);
    if (c.k == 0) throw std::invalid_argument("scheme component of degree zero");
}

inline void to_json(nlohmann::json& j, const Scheme& z) {
    j = {{"m", z.m}, {"components", z.components}};
}
inline void from_json(const nlohmann::json& j, Scheme& z) {
    j.at("m").get_to(z.m);
    j.at("components").get_to(z.components);
    for (const auto& c : z.components)
        if (c.carrier.m != z.m)
            throw std::invalid_argument("scheme component in the wrong ambient space");
}

inline void to_json(nlohmann::json& j, const HFunction& h) {
    j = {{"d", h.d}, {"h0", h.h0}, {"h1", h.h1}, {"conditions_rank", h.conditions_rank}};
}
inline void from_json(const nlohmann::json& j, HFunction& h) {
    j.at("d").get_to(h.d);
    j.at("h0").get_to(h.h0);
    j.at("h1").get_to(h.h1);
    j.at("conditions_rank").get_to(h.conditions_rank);
}

}  // namespace waring::schemes

namespace waring::sylvester {

inline void to_json(nlohmann::json& j, const RankResult& r) {
    j = {{"e", r.e},
         {"rank", r.rank},
         {"border_rank", r.border_rank},
         {"g", r.g},
         {"squarefree", r.squarefree},
         {"kernel_unique", r.kernel_unique}};
}
inline void from_json(const nlohmann::json& j, RankResult& r) {
    j.at("e").get_to(r.e);
    j.at("rank").get_to(r.rank);
    j.at("border_rank").get_to(r.border_rank);
    j.at("g").get_to(r.g);
    j.at("squarefree").get_to(r.squarefree);
    j.at("kernel_unique").get_to(r.kernel_unique);
}

}  // namespace waring::sylvester

namespace waring::strata {

inline BandTag band_tag_from_name(const std::string& s) {
    for (BandTag t : {BandTag::equal_rank, BandTag::middle, BandTag::top_even,
                      BandTag::top_odd_even_core, BandTag::top_odd_odd_core,
                      BandTag::inadmissible})
        if (band_tag_name(t) == s) return t;
    throw std::invalid_argument("unknown band tag: " + s);
}

inline void to_json(nlohmann::json& j, const Band& b) {
    j = {{"tag", band_tag_name(b.tag)}, {"b", b.b}, {"c", b.c}, {"w", b.w}};
}
inline void from_json(const nlohmann::json& j, Band& b) {
    b.tag = band_tag_from_name(j.at("tag").get<std::string>());
    j.at("b").get_to(b.b);
    j.at("c").get_to(b.c);
    j.at("w").get_to(b.w);
}

inline void to_json(nlohmann::json& j, const Intermediates& i) {
    j = {{"L", i.L},           {"L1", i.L1},
         {"L2", i.L2},         {"C", i.C},
         {"E", i.E},           {"B1", i.B1},
         {"B2", i.B2},         {"Aprime", i.Aprime},
         {"Q", i.Q},           {"Pprime", i.Pprime},
         {"core_point", i.core_point}, {"M", i.M}};
}
inline void from_json(const nlohmann::json& j, Intermediates& i) {
    j.at("L").get_to(i.L);
    j.at("L1").get_to(i.L1);
    j.at("L2").get_to(i.L2);
    j.at("C").get_to(i.C);
    j.at("E").get_to(i.E);
    j.at("B1").get_to(i.B1);
    j.at("B2").get_to(i.B2);
    j.at("Aprime").get_to(i.Aprime);
    j.at("Q").get_to(i.Q);
    j.at("Pprime").get_to(i.Pprime);
    j.at("core_point").get_to(i.core_point);
    j.at("M").get_to(i.M);
}

inline void to_json(nlohmann::json& j, const Witness& w) {
    j = {{"m", w.m},         {"d", w.d},
         {"s", w.s},         {"r", w.r},
         {"band", w.band},   {"seed", w.seed},
         {"A", w.A},         {"B", w.B},
         {"P", w.P},         {"A_plane", w.A2},
         {"B_plane", w.B2},  {"P_plane", w.P2},
         {"intermediates", w.inter}};
}
inline void from_json(const nlohmann::json& j, Witness& w) {
    j.at("m").get_to(w.m);
    j.at("d").get_to(w.d);
    j.at("s").get_to(w.s);
    j.at("r").get_to(w.r);
    j.at("band").get_to(w.band);
    j.at("seed").get_to(w.seed);
    j.at("A").get_to(w.A);
    j.at("B").get_to(w.B);
    j.at("P").get_to(w.P);
    j.at("A_plane").get_to(w.A2);
    j.at("B_plane").get_to(w.B2);
    j.at("P_plane").get_to(w.P2);
    j.at("intermediates").get_to(w.inter);
}

}  // namespace waring::strata

namespace waring::certify {

inline void to_json(nlohmann::json& j, const CheckItem& c) {
    j = {{"name", c.name}, {"value", c.value}, {"pass", c.pass}};
}
inline void from_json(const nlohmann::json& j, CheckItem& c) {
    j.at("name").get_to(c.name);
    j.at("value").get_to(c.value);
    j.at("pass").get_to(c.pass);
}

inline void to_json(nlohmann::json& j, const BrCert& b) {
    j = {{"flattening_k", b.flattening_k},
         {"flattening_rank", b.flattening_rank},
         {"membership", b.membership},
         {"subschemes_checked", b.subschemes_checked},
         {"minimal", b.minimal},
         {"uniqueness_note", b.uniqueness_note},
         {"border_rank", b.border_rank}};
}
inline void from_json(const nlohmann::json& j, BrCert& b) {
    j.at("flattening_k").get_to(b.flattening_k);
    j.at("flattening_rank").get_to(b.flattening_rank);
    j.at("membership").get_to(b.membership);
    j.at("subschemes_checked").get_to(b.subschemes_checked);
    j.at("minimal").get_to(b.minimal);
    j.at("uniqueness_note").get_to(b.uniqueness_note);
    j.at("border_rank").get_to(b.border_rank);
}

inline void to_json(nlohmann::json& j, const SrUpper& s) {
    j = {{"coefficients", s.coefficients}};
}
inline void from_json(const nlohmann::json& j, SrUpper& s) {
    j.at("coefficients").get_to(s.coefficients);
}

inline void to_json(nlohmann::json& j, const SrLower& s) {
    j = {{"lemma_id", s.lemma_id},
         {"checklist", s.checklist},
         {"symmetric_rank", s.symmetric_rank},
         {"note", s.note}};
}
inline void from_json(const nlohmann::json& j, SrLower& s) {
    j.at("lemma_id").get_to(s.lemma_id);
    j.at("checklist").get_to(s.checklist);
    j.at("symmetric_rank").get_to(s.symmetric_rank);
    j.at("note").get_to(s.note);
}

inline void to_json(nlohmann::json& j, const V4Report& r) {
    j = {{"divisor", r.divisor},
         {"divisor_degree", r.divisor_degree},
         {"residual_h1", r.residual_h1},
         {"hypothesis_ok", r.hypothesis_ok},
         {"e_independent", r.e_independent},
         {"e_matches_residual", r.e_matches_residual},
         {"q_exists", r.q_exists}};
}
inline void from_json(const nlohmann::json& j, V4Report& r) {
    j.at("divisor").get_to(r.divisor);
    j.at("divisor_degree").get_to(r.divisor_degree);
    j.at("residual_h1").get_to(r.residual_h1);
    j.at("hypothesis_ok").get_to(r.hypothesis_ok);
    j.at("e_independent").get_to(r.e_independent);
    j.at("e_matches_residual").get_to(r.e_matches_residual);
    j.at("q_exists").get_to(r.q_exists);
}

inline void to_json(nlohmann::json& j, const Falsification& f) {
    j = {{"k_max", f.k_max},
         {"budget", f.budget},
         {"tested", f.tested},
         {"outcome", f.outcome},
         {"found_size", f.found_size}};
}
inline void from_json(const nlohmann::json& j, Falsification& f) {
    j.at("k_max").get_to(f.k_max);
    j.at("budget").get_to(f.budget);
    j.at("tested").get_to(f.tested);
    j.at("outcome").get_to(f.outcome);
    j.at("found_size").get_to(f.found_size);
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
    j = {{"schema", c.schema},
         {"witness", c.witness},
         {"br_cert", c.br_cert},
         {"sr_upper", c.sr_upper},
         {"sr_lower", c.sr_lower},
         {"h1_check", c.h1_check},
         {"v4_reports", c.v4_reports},
         {"falsification", c.falsification}};
}
inline void from_json(const nlohmann::json& j, Certificate& c) {
    j.at("schema").get_to(c.schema);
    j.at("witness").get_to(c.witness);
    j.at("br_cert").get_to(c.br_cert);
    j.at("sr_upper").get_to(c.sr_upper);
    j.at("sr_lower").get_to(c.sr_lower);
    j.at("h1_check").get_to(c.h1_check);
    j.at("v4_reports").get_to(c.v4_reports);
    j.at("falsification").get_to(c.falsification);
}

}  // namespace waring::certify
