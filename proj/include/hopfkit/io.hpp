#pragma once

// Text-based structure files (.hfj): a line-oriented keyed format holding
// exact scalars, documented field by field in the README. No binary floats
// anywhere; rationals are written as "p/q" or integers, GF(p) values as
// integers reduced mod p.
//
//   hopfkit 1              magic + schema version
//   kind bialgebra         object kind
//   field rational         or: field gf <p>
//   dim 2                  integer keys: <name> <values...>
//   map mult 2 4           map <name> <rows> <cols>, then rows x cols entries
//   1 0 0 1
//   0 1 1 0
//   ...
//
// '#' starts a comment; blank lines are ignored; keys may appear in any
// order after the three header lines.

#include <fstream>
#include <map>
#include <sstream>

#include "hopfkit/structures.hpp"
#include "hopfkit/rep.hpp"
#include "hopfkit/constructions.hpp"
#include "hopfkit/galois.hpp"
#include "hopfkit/natposet.hpp"
#include "hopfkit/pivotal.hpp"
#include "hopfkit/algebroids.hpp"

namespace hopfkit {

struct RawMap {
    Index rows = 0, cols = 0;
    std::vector<std::string> entries;  // rows*cols tokens, row-major
};

struct RawDoc {
    int version = 1;
    std::string kind;
    FieldDesc field;
    std::map<std::string, std::vector<long long>> ints;
    std::map<std::string, RawMap> maps;

    long long int1(const std::string& key) const {
        auto it = ints.find(key);
        if (it == ints.end() || it->second.size() != 1)
            throw std::invalid_argument("structure file: missing integer field '" + key + "'");
        return it->second[0];
    }
    bool has_map(const std::string& key) const { return maps.count(key) > 0; }
    const RawMap& map_at(const std::string& key) const {
        auto it = maps.find(key);
        if (it == maps.end())
            throw std::invalid_argument("structure file: missing map '" + key + "'");
        return it->second;
    }
};

inline const std::vector<std::string>& known_kinds() {
    static const std::vector<std::string> kinds = {
        "algebra",        "coalgebra",     "bialgebra",      "hopf",
        "module",         "comodule",      "yd",             "hopf-module",
        "injection",      "ore",           "bialgebroid",    "monoid",
        "natset",         "pivotal",       "rmatrix",        "linmap",
        "module-algebra", "braided-hopf",  "algebroid-module", "algebroid-yd",
        "algebroid-hopf-module"};
    return kinds;
}

inline RawDoc parse_raw(std::istream& in, const std::string& name = "<input>") {
    RawDoc doc;
    std::string line;
    long long lineno = 0;
    bool seen_magic = false;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (!seen_magic) {
            if (key != "hopfkit") fail("expected 'hopfkit <version>' magic line");
            if (!(ls >> doc.version)) fail("missing schema version");
            if (doc.version != 1) fail("unsupported schema version " + std::to_string(doc.version));
            seen_magic = true;
            continue;
        }
        if (key == "kind") {
            if (!(ls >> doc.kind)) fail("missing kind");
            bool known = false;
            for (const auto& k : known_kinds())
                if (k == doc.kind) known = true;
            if (!known) fail("unknown kind '" + doc.kind + "'");
        } else if (key == "field") {
            std::string f;
            if (!(ls >> f)) fail("missing field descriptor");
            if (f == "rational") {
                doc.field = FieldDesc::rationals();
            } else if (f == "gf") {
                long long p = 0;
                if (!(ls >> p) || p < 2) fail("field gf needs a modulus >= 2");
                doc.field = FieldDesc::gf(static_cast<unsigned long long>(p));
            } else {
                fail("unknown field '" + f + "'");
            }
        } else if (key == "map") {
            std::string mname;
            long long r = 0, c = 0;
            if (!(ls >> mname >> r >> c) || r < 0 || c < 0) fail("map needs: name rows cols");
            RawMap m;
            m.rows = r;
            m.cols = c;
            m.entries.reserve(r * c);
            while (static_cast<long long>(m.entries.size()) < r * c) {
                std::string row;
                if (!std::getline(in, row)) fail("unexpected end of file inside map " + mname);
                ++lineno;
                auto h2 = row.find('#');
                if (h2 != std::string::npos) row.erase(h2);
                std::istringstream rs(row);
                std::string tok;
                while (rs >> tok) m.entries.push_back(tok);
            }
            if (static_cast<long long>(m.entries.size()) != r * c)
                fail("map " + mname + " has " + std::to_string(m.entries.size()) + " entries, expected " +
                     std::to_string(r * c));
            doc.maps[mname] = std::move(m);
        } else {
            std::vector<long long> vals;
            long long v;
            while (ls >> v) vals.push_back(v);
            if (vals.empty()) fail("key '" + key + "' carries no integer values");
            doc.ints[key] = std::move(vals);
        }
    }
    if (!seen_magic) throw std::invalid_argument(name + ": empty file or missing magic line");
    if (doc.kind.empty()) throw std::invalid_argument(name + ": missing kind");
    return doc;
}

inline RawDoc parse_raw_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open structure file '" + path + "'");
    return parse_raw(in, path);
}

template <class K>
LinMap<K> typed_map(const RawDoc& doc, const std::string& name, Index rows, Index cols) {
    const RawMap& raw = doc.map_at(name);
    if (raw.rows != rows || raw.cols != cols)
        throw std::invalid_argument("map '" + name + "' is " + std::to_string(raw.rows) + "x" +
                                    std::to_string(raw.cols) + ", expected " + std::to_string(rows) +
                                    "x" + std::to_string(cols));
    LinMap<K> m = zeros<K>(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = parse_scalar<K>(raw.entries[i * cols + j], doc.field);
    return m;
}

template <class K>
BialgebraSC<K> read_bialgebra(const RawDoc& doc, const std::string& prefix = "") {
    BialgebraSC<K> b;
    b.dim = doc.int1(prefix.empty() ? "dim" : prefix + "-dim");
    auto p = [&](const char* n) { return prefix.empty() ? std::string(n) : prefix + "." + n; };
    b.mult = typed_map<K>(doc, p("mult"), b.dim, b.dim * b.dim);
    b.unit = typed_map<K>(doc, p("unit"), b.dim, 1);
    b.comult = typed_map<K>(doc, p("comult"), b.dim * b.dim, b.dim);
    b.counit = typed_map<K>(doc, p("counit"), 1, b.dim);
    return b;
}

template <class K>
AlgebraSC<K> read_algebra(const RawDoc& doc, const std::string& prefix = "") {
    AlgebraSC<K> a;
    a.dim = doc.int1(prefix.empty() ? "dim" : prefix + "-dim");
    auto p = [&](const char* n) { return prefix.empty() ? std::string(n) : prefix + "." + n; };
    a.mult = typed_map<K>(doc, p("mult"), a.dim, a.dim * a.dim);
    a.unit = typed_map<K>(doc, p("unit"), a.dim, 1);
    return a;
}

template <class K>
CoalgebraSC<K> read_coalgebra(const RawDoc& doc, const std::string& prefix = "") {
    CoalgebraSC<K> c;
    c.dim = doc.int1(prefix.empty() ? "dim" : prefix + "-dim");
    auto p = [&](const char* n) { return prefix.empty() ? std::string(n) : prefix + "." + n; };
    c.comult = typed_map<K>(doc, p("comult"), c.dim * c.dim, c.dim);
    c.counit = typed_map<K>(doc, p("counit"), 1, c.dim);
    return c;
}

template <class K>
HopfSC<K> read_hopf(const RawDoc& doc, const std::string& prefix = "") {
    HopfSC<K> h;
    h.b = read_bialgebra<K>(doc, prefix);
    auto p = [&](const char* n) { return prefix.empty() ? std::string(n) : prefix + "." + n; };
    h.antipode = typed_map<K>(doc, p("antipode"), h.b.dim, h.b.dim);
    if (doc.has_map(p("opantipode")))
        h.opantipode = typed_map<K>(doc, p("opantipode"), h.b.dim, h.b.dim);
    return h;
}

template <class K>
ModuleRep<K> read_module(const RawDoc& doc) {
    ModuleRep<K> m;
    m.parent = read_bialgebra<K>(doc, "parent");
    m.dim = doc.int1("dim");
    m.action = typed_map<K>(doc, "action", m.dim, m.parent.dim * m.dim);
    return m;
}

template <class K>
ComoduleRep<K> read_comodule(const RawDoc& doc) {
    ComoduleRep<K> m;
    m.parent = read_coalgebra<K>(doc, "parent");
    m.dim = doc.int1("dim");
    m.coaction = typed_map<K>(doc, "coaction", m.parent.dim * m.dim, m.dim);
    return m;
}

template <class K>
YDRep<K> read_yd(const RawDoc& doc) {
    YDRep<K> y;
    y.parent = read_hopf<K>(doc, "parent");
    y.dim = doc.int1("dim");
    y.action = typed_map<K>(doc, "action", y.dim, y.parent.dim() * y.dim);
    y.coaction = typed_map<K>(doc, "coaction", y.parent.dim() * y.dim, y.dim);
    return y;
}

template <class K>
HopfModuleRep<K> read_hopf_module(const RawDoc& doc) {
    HopfModuleRep<K> m;
    m.parent = read_bialgebra<K>(doc, "parent");
    m.dim = doc.int1("dim");
    m.action = typed_map<K>(doc, "action", m.dim, m.parent.dim * m.dim);
    m.coaction = typed_map<K>(doc, "coaction", m.parent.dim * m.dim, m.dim);
    return m;
}

template <class K>
BialgebraInjection<K> read_injection(const RawDoc& doc) {
    BialgebraInjection<K> inj;
    inj.b = read_bialgebra<K>(doc, "b");
    inj.h = read_bialgebra<K>(doc, "h");
    inj.f = typed_map<K>(doc, "f", inj.h.dim, inj.b.dim);
    return inj;
}

template <class K>
OreDatum<K> read_ore(const RawDoc& doc) {
    OreDatum<K> od;
    od.b = read_bialgebra<K>(doc, "parent");
    od.d = typed_map<K>(doc, "derivation", od.b.dim, od.b.dim);
    return od;
}

template <class K>
RMatrix<K> read_rmatrix(const RawDoc& doc) {
    RMatrix<K> r;
    r.parent = read_bialgebra<K>(doc, "parent");
    r.element = typed_map<K>(doc, "element", r.parent.dim * r.parent.dim, 1);
    return r;
}

template <class K>
ModuleAlgebra<K> read_module_algebra(const RawDoc& doc) {
    ModuleAlgebra<K> ma;
    ma.parent = read_bialgebra<K>(doc, "parent");
    ma.carrier = read_algebra<K>(doc, "carrier");
    ma.action = typed_map<K>(doc, "action", ma.carrier.dim, ma.parent.dim * ma.carrier.dim);
    return ma;
}

template <class K>
BraidedHopfInYD<K> read_braided_hopf(const RawDoc& doc) {
    BraidedHopfInYD<K> a;
    a.parent = read_hopf<K>(doc, "parent");
    a.dim = doc.int1("dim");
    Index d = a.parent.dim(), n = a.dim;
    a.action = typed_map<K>(doc, "action", n, d * n);
    a.coaction = typed_map<K>(doc, "coaction", d * n, n);
    a.mult = typed_map<K>(doc, "mult", n, n * n);
    a.unit = typed_map<K>(doc, "unit", n, 1);
    a.comult = typed_map<K>(doc, "comult", n * n, n);
    a.counit = typed_map<K>(doc, "counit", 1, n);
    a.antipode = typed_map<K>(doc, "antipode", n, n);
    return a;
}

template <class K>
BialgebroidSC<K> read_bialgebroid(const RawDoc& doc) {
    BialgebroidSC<K> b;
    b.base = build_base(read_algebra<K>(doc, "base"));
    b.h_dim = doc.int1("dim");
    Index ad = b.a_dim(), hd = b.h_dim;
    b.mult = typed_map<K>(doc, "mult", hd, hd * hd);
    b.eta = typed_map<K>(doc, "eta", hd, ad * ad);
    b.comult_lift = typed_map<K>(doc, "comult", hd * hd, hd);
    b.counit = typed_map<K>(doc, "counit", ad, hd);
    return b;
}

inline FiniteMonoid read_monoid(const RawDoc& doc) {
    FiniteMonoid m;
    m.order = doc.int1("order");
    m.identity = doc.ints.count("identity") ? doc.int1("identity") : 0;
    const RawMap& t = doc.map_at("table");
    if (t.rows != m.order || t.cols != m.order)
        throw std::invalid_argument("monoid table must be order x order");
    for (const auto& e : t.entries) m.table.push_back(std::stoll(e));
    m.validate();
    return m;
}

inline IntSet read_natset(const RawDoc& doc) {
    if (doc.ints.count("generators")) {
        std::set<nat> gens(doc.ints.at("generators").begin(), doc.ints.at("generators").end());
        return IntSet{NumericalSubmonoid(gens)};
    }
    PeriodicSet ps;
    if (doc.ints.count("prefix"))
        ps.prefix.insert(doc.ints.at("prefix").begin(), doc.ints.at("prefix").end());
    ps.start = doc.int1("start");
    ps.period = doc.int1("period");
    if (doc.ints.count("residues"))
        ps.residues.insert(doc.ints.at("residues").begin(), doc.ints.at("residues").end());
    return IntSet{ps};
}

template <class K>
PivotalPair<K> read_pivotal(const RawDoc& doc) {
    if (doc.has_map("g")) {
        Index n = doc.map_at("g").rows;
        return pivotal_from_matrix(typed_map<K>(doc, "g", n, n));
    }
    PivotalPair<K> pp;
    pp.p_dim = doc.int1("p-dim");
    pp.q_dim = doc.int1("q-dim");
    pp.cvl = typed_map<K>(doc, "cvl", pp.p_dim * pp.q_dim, 1);
    pp.evl = typed_map<K>(doc, "evl", 1, pp.q_dim * pp.p_dim);
    pp.cvr = typed_map<K>(doc, "cvr", pp.q_dim * pp.p_dim, 1);
    pp.evr = typed_map<K>(doc, "evr", 1, pp.p_dim * pp.q_dim);
    return pp;
}

// A bare linear map: kind linmap with a single "m" entry.
template <class K>
LinMap<K> read_linmap(const RawDoc& doc) {
    const RawMap& raw = doc.map_at("m");
    return typed_map<K>(doc, "m", raw.rows, raw.cols);
}

template <class K>
AlgebroidModule<K> read_algebroid_module_part(const RawDoc& doc, const BialgebroidSC<K>& b) {
    AlgebroidModule<K> m;
    m.dim = doc.int1("module-dim");
    m.action = typed_map<K>(doc, "action", m.dim, b.h_dim * m.dim);
    return m;
}

template <class K>
AlgebroidYDHopf<K> read_algebroid_yd_part(const RawDoc& doc, const BialgebroidSC<K>& b) {
    AlgebroidYDHopf<K> a;
    a.dim = doc.int1("b-dim");
    Index hd = b.h_dim, ad = b.a_dim(), n = a.dim;
    a.action = typed_map<K>(doc, "b.action", n, hd * n);
    a.coaction = typed_map<K>(doc, "b.coaction", hd * n, n);
    a.mult = typed_map<K>(doc, "b.mult", n, n * n);
    a.unit = typed_map<K>(doc, "b.unit", n, ad);
    a.comult = typed_map<K>(doc, "b.comult", n * n, n);
    a.counit = typed_map<K>(doc, "b.counit", ad, n);
    a.antipode = typed_map<K>(doc, "b.antipode", n, n);
    return a;
}

template <class K>
AlgebroidHopfModule<K> read_algebroid_hopf_module_part(const RawDoc& doc, const BialgebroidSC<K>& b) {
    AlgebroidHopfModule<K> hm;
    hm.module = read_algebroid_module_part(doc, b);
    hm.coaction_lift = typed_map<K>(doc, "coaction", b.h_dim * hm.module.dim, hm.module.dim);
    return hm;
}

// ---- serialization ----------------------------------------------------

template <class K>
void write_map(std::ostream& os, const std::string& name, const LinMap<K>& m) {
    os << "map " << name << " " << m.rows() << " " << m.cols() << "\n";
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << scalar_to_string(m(i, j));
        os << "\n";
    }
}

inline void write_header(std::ostream& os, const std::string& kind, const FieldDesc& fd) {
    os << "hopfkit 1\n";
    os << "kind " << kind << "\n";
    if (fd.rational) os << "field rational\n";
    else os << "field gf " << fd.p << "\n";
}

template <class K>
void serialize_bialgebra_body(std::ostream& os, const BialgebraSC<K>& b, const std::string& prefix = "") {
    auto p = [&](const char* n) { return prefix.empty() ? std::string(n) : prefix + "." + n; };
    os << (prefix.empty() ? "dim" : prefix + "-dim") << " " << b.dim << "\n";
    write_map(os, p("mult"), b.mult);
    write_map(os, p("unit"), b.unit);
    write_map(os, p("comult"), b.comult);
    write_map(os, p("counit"), b.counit);
}

template <class K>
void serialize(std::ostream& os, const BialgebraSC<K>& b, const FieldDesc& fd) {
    write_header(os, "bialgebra", fd);
    serialize_bialgebra_body(os, b);
}

template <class K>
void serialize(std::ostream& os, const HopfSC<K>& h, const FieldDesc& fd) {
    write_header(os, "hopf", fd);
    serialize_bialgebra_body(os, h.b);
    write_map(os, "antipode", h.antipode);
    if (h.opantipode) write_map(os, "opantipode", *h.opantipode);
}

template <class K>
void serialize(std::ostream& os, const ModuleRep<K>& m, const FieldDesc& fd) {
    write_header(os, "module", fd);
    serialize_bialgebra_body(os, m.parent, "parent");
    os << "dim " << m.dim << "\n";
    write_map(os, "action", m.action);
}

template <class K>
void serialize(std::ostream& os, const RMatrix<K>& r, const FieldDesc& fd) {
    write_header(os, "rmatrix", fd);
    serialize_bialgebra_body(os, r.parent, "parent");
    LinMap<K> el = r.element;
    write_map(os, "element", el);
}

}  // namespace hopfkit
