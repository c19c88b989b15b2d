#include "report.hpp"

#include <sstream>

namespace vcn::cli {

using nlohmann::json;

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json poly_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({int_json(c), e.t_pow, e.s_pow});
    return arr;
}

json poly_json(const TPoly& p) {
    return poly_json(embed(p));
}

namespace {

json ext_json(const ExtInt& v) {
    if (v.is_finite()) return json(v.value());
    return json(v.to_string());
}

std::vector<std::string> input_lines(const DiagramCode& code) {
    std::vector<std::string> lines;
    std::istringstream in(serialize(code));
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

const char* kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::TDiagram: return "TDiagram";
        case CertificateKind::MDiagram: return "MDiagram";
        default: return "NoCertificate";
    }
}

json side_json(const MinimalityCertificate& cert) {
    json s;
    s["special"] = cert.special;
    s["critical_arcs"] = cert.special ? json(cert.critical_arcs) : json(nullptr);
    s["det_t"] = cert.det_t ? poly_json(*cert.det_t) : json(nullptr);
    s["per_m"] = cert.per_m ? int_json(*cert.per_m) : json(nullptr);
    json cyc = json::array();
    for (int v : cert.cyclic_crossings) cyc.push_back(v + 1);
    s["cyclic_crossings"] = cyc;
    s["certificate_kind"] = kind_name(cert.kind);
    if (cert.eps_beta) {
        s["epsilon"] = cert.eps_beta->epsilon;
        s["beta"] = cert.eps_beta->beta;
        s["alpha"] = cert.eps_beta->alpha;
        s["det_m"] = cert.eps_beta->det_m;
        s["x"] = cert.eps_beta->x;
        s["y"] = cert.eps_beta->y;
    } else {
        s["epsilon"] = nullptr;
        s["beta"] = nullptr;
        s["alpha"] = nullptr;
        s["det_m"] = nullptr;
        s["x"] = nullptr;
        s["y"] = nullptr;
    }
    s["reasons"] = cert.reasons;
    return s;
}

}  // namespace

json make_report(const DiagramCode& parsed) {
    auto [proper, offending] = is_proper(parsed);
    DiagramCode base = proper ? parsed : properize(parsed);
    ZetaReport zr = zeta(base);
    auto certs = certify(base);

    json j;
    j["schema_version"] = "1";
    j["input"] = input_lines(parsed);
    j["properized"] = !proper;
    j["n"] = zr.n;
    j["k"] = zr.k;
    j["writhe"] = zr.writhe;
    j["zeta"] = poly_json(zr.zeta);
    j["deg_s"] = ext_json(zr.deg_s);
    j["mdeg_s"] = ext_json(zr.mdeg_s);
    j["lower_bound"] = zr.lower_bound;
    j["sides"]["deg"] = side_json(certs[0]);
    j["sides"]["mdeg"] = side_json(certs[1]);
    return j;
}

std::string certificate_line(const std::vector<MinimalityCertificate>& certs) {
    const MinimalityCertificate* best = nullptr;
    for (const auto& c : certs) {
        if (!c.certified()) continue;
        if (!best || (best->kind != CertificateKind::MDiagram &&
                      c.kind == CertificateKind::MDiagram))
            best = &c;
    }
    if (!best) return {};

    std::ostringstream os;
    os << "MINIMAL k=" << best->k << " via "
       << (best->kind == CertificateKind::MDiagram ? "M-diagram" : "T-diagram") << " ("
       << (best->side == Side::Deg ? "deg" : "mdeg") << " side): det T = "
       << display_by_t(*best->det_t);
    if (best->per_m) os << ", per M = " << best->per_m->get_str();
    return os.str();
}

std::string uncertified_line(const std::vector<MinimalityCertificate>& certs) {
    std::ostringstream os;
    os << "NOT CERTIFIED:";
    bool first = true;
    for (const auto& c : certs) {
        os << (first ? " " : "; ") << (c.side == Side::Deg ? "deg" : "mdeg") << " side: ";
        first = false;
        for (std::size_t i = 0; i < c.reasons.size(); ++i)
            os << (i ? ", " : "") << c.reasons[i];
        if (c.reasons.empty()) os << "no reason recorded";
    }
    return os.str();
}

std::string human_report(const DiagramCode& parsed) {
    auto [proper, offending] = is_proper(parsed);
    DiagramCode base = proper ? parsed : properize(parsed);
    ZetaReport zr = zeta(base);
    auto certs = certify(base);

    std::ostringstream os;
    os << "components: " << parsed.components.size() << "\n";
    os << "n: " << zr.n << "  k: " << zr.k << "  writhe: " << zr.writhe
       << "  properized: " << (proper ? "no" : "yes") << "\n";
    os << "zeta: " << to_string(zr.zeta) << "\n";
    os << "deg_s: " << zr.deg_s.to_string() << "  mdeg_s: " << zr.mdeg_s.to_string() << "\n";
    os << "lower bound on virtual crossings: " << zr.lower_bound << "\n";
    for (const auto& c : certs) {
        os << (c.side == Side::Deg ? "deg side: " : "mdeg side: ");
        if (!c.certified()) {
            os << "NoCertificate (";
            for (std::size_t i = 0; i < c.reasons.size(); ++i) os << (i ? ", " : "") << c.reasons[i];
            os << ")";
        } else {
            os << kind_name(c.kind) << ", det T = " << display_by_t(*c.det_t);
            if (c.per_m) os << ", per M = " << c.per_m->get_str();
            if (c.eps_beta)
                os << ", epsilon = " << c.eps_beta->epsilon << ", beta = " << c.eps_beta->beta
                   << ", alpha = " << c.eps_beta->alpha;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace vcn::cli
