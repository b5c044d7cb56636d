#include "homcrypt/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "homcrypt/errors.hpp"

namespace homcrypt {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file: " + path);
    out << content;
}

namespace {

// Line cursor that remembers line numbers for error messages and skips blank
// and comment (#) lines.
class LineReader {
public:
    explicit LineReader(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            lines_.push_back(line);
        }
    }

    bool next(std::string& out) {
        while (pos_ < lines_.size()) {
            const std::string& line = lines_[pos_++];
            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    }

    std::string require(const std::string& what) {
        std::string line;
        if (!next(line))
            throw ParseError("unexpected end of file, expected " + what);
        return line;
    }

    // "key: rest" -> rest, or a parse error naming the line.
    std::string require_key(const std::string& key) {
        std::string line = require("'" + key + ":'");
        std::string prefix = key + ":";
        if (line.rfind(prefix, 0) != 0)
            throw ParseError("line " + std::to_string(pos_) + ": expected '" + prefix +
                             "', got: " + line);
        std::string rest = line.substr(prefix.size());
        std::size_t first = rest.find_first_not_of(" \t");
        return first == std::string::npos ? "" : rest.substr(first);
    }

    std::size_t line_number() const { return pos_; }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": '" + s + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

std::vector<int> parse_index_row(const std::string& line, int expected, const std::string& what) {
    auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != expected)
        throw ParseError(what + " row has " + std::to_string(toks.size()) + " entries, expected " +
                         std::to_string(expected));
    std::vector<int> row;
    row.reserve(toks.size());
    for (const auto& t : toks)
        row.push_back(parse_int(t, what + " entry"));
    return row;
}

void require_format_1(LineReader& r) {
    std::string v = r.require_key("format");
    if (v != "1")
        throw ParseError("unsupported format version: " + v);
}

Integer parse_integer(const std::string& s, const std::string& what) {
    try {
        return Integer(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad " + what + ": '" + s + "'");
    }
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    LineReader r(text);
    Presentation p;
    std::string line = r.require("'gens:'");
    if (line.rfind("format:", 0) == 0)
        line = r.require("'gens:'");
    if (line.rfind("gens:", 0) != 0)
        throw ParseError("line " + std::to_string(r.line_number()) + ": expected 'gens:'");
    p.generators = split_ws(line.substr(5));
    while (r.next(line)) {
        if (line.rfind("rel:", 0) != 0)
            throw ParseError("line " + std::to_string(r.line_number()) +
                             ": expected 'rel:', got: " + line);
        try {
            p.relators.push_back(parse_word(kGeneratorAlphabet, line.substr(4)));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(r.line_number()) + ": " + e.what());
        }
    }
    p.validate();
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : p.generators)
        os << ' ' << g;
    os << '\n';
    for (const auto& rel : p.relators)
        os << "rel: " << rel.to_string() << '\n';
    return os.str();
}

ConcreteGroup parse_concrete_group(const std::string& text) {
    LineReader r(text);
    require_format_1(r);
    ConcreteGroup cg;
    int n = parse_int(r.require_key("elements"), "element count");
    if (n <= 0)
        throw ParseError("element count must be positive");
    cg.labels = split_ws(r.require_key("labels"));
    if (static_cast<int>(cg.labels.size()) != n)
        throw ParseError("label count does not match element count");
    std::string line = r.require("'table:'");
    if (line.rfind("table:", 0) != 0)
        throw ParseError("expected 'table:'");
    for (int i = 0; i < n; ++i)
        cg.table.push_back(parse_index_row(r.require("table row"), n, "table"));
    while (r.next(line)) {
        if (line.rfind("gen:", 0) != 0)
            throw ParseError("line " + std::to_string(r.line_number()) +
                             ": expected 'gen:', got: " + line);
        auto toks = split_ws(line.substr(4));
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(r.line_number()) +
                             ": gen line needs a name and an element index");
        cg.generator_assignment[toks[0]] = parse_int(toks[1], "generator element index");
    }
    cg.compute_inverses();
    cg.validate();
    return cg;
}

std::string format_concrete_group(const ConcreteGroup& cg) {
    std::ostringstream os;
    os << "format: 1\n";
    os << "elements: " << cg.size() << '\n';
    os << "labels:";
    for (const auto& l : cg.labels)
        os << ' ' << l;
    os << "\ntable:\n";
    for (const auto& row : cg.table) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    for (const auto& [name, g] : cg.generator_assignment)
        os << "gen: " << name << ' ' << g << '\n';
    return os.str();
}

FiniteRing parse_ring(const std::string& text) {
    LineReader r(text);
    require_format_1(r);
    FiniteRing ring;
    int n = parse_int(r.require_key("elements"), "element count");
    if (n <= 0)
        throw ParseError("element count must be positive");
    ring.labels = split_ws(r.require_key("labels"));
    if (static_cast<int>(ring.labels.size()) != n)
        throw ParseError("label count does not match element count");
    ring.zero = parse_int(r.require_key("zero"), "zero index");
    ring.one = parse_int(r.require_key("one"), "one index");
    std::string line = r.require("'add:'");
    if (line.rfind("add:", 0) != 0)
        throw ParseError("expected 'add:'");
    for (int i = 0; i < n; ++i)
        ring.add.push_back(parse_index_row(r.require("addition row"), n, "addition"));
    line = r.require("'mul:'");
    if (line.rfind("mul:", 0) != 0)
        throw ParseError("expected 'mul:'");
    for (int i = 0; i < n; ++i)
        ring.mul.push_back(parse_index_row(r.require("multiplication row"), n, "multiplication"));
    ring.validate();
    return ring;
}

std::string format_ring(const FiniteRing& ring) {
    std::ostringstream os;
    os << "format: 1\n";
    os << "elements: " << ring.size() << '\n';
    os << "labels:";
    for (const auto& l : ring.labels)
        os << ' ' << l;
    os << "\nzero: " << ring.zero << "\none: " << ring.one << '\n';
    os << "add:\n";
    for (const auto& row : ring.add) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    os << "mul:\n";
    for (const auto& row : ring.mul) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

Mat2Z parse_matrix_file(const std::string& text) {
    LineReader r(text);
    require_format_1(r);
    auto toks = split_ws(r.require_key("matrix"));
    if (toks.size() != 4)
        throw ParseError("matrix line needs four entries");
    return {parse_integer(toks[0], "matrix entry"), parse_integer(toks[1], "matrix entry"),
            parse_integer(toks[2], "matrix entry"), parse_integer(toks[3], "matrix entry")};
}

std::string format_matrix_file(const Mat2Z& m) {
    return "format: 1\nmatrix: " + mat_to_string(m) + "\n";
}

Word parse_word_file(const std::string& text, const std::string& alphabet) {
    LineReader r(text);
    require_format_1(r);
    return parse_word(alphabet, r.require_key("word"));
}

std::string format_word_file(const Word& w) {
    return "format: 1\nword: " + w.to_string() + "\n";
}

namespace {

json presentation_to_json(const Presentation& p) {
    json j;
    j["generators"] = p.generators;
    std::vector<std::string> rels;
    for (const auto& rel : p.relators)
        rels.push_back(rel.to_string());
    j["relators"] = rels;
    return j;
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& s : j.at("relators").get<std::vector<std::string>>())
        p.relators.push_back(parse_word(kGeneratorAlphabet, s));
    p.validate();
    return p;
}

json group_to_json(const ConcreteGroup& cg) {
    json j;
    j["labels"] = cg.labels;
    j["table"] = cg.table;
    json gens = json::object();
    for (const auto& [name, g] : cg.generator_assignment)
        gens[name] = g;
    j["generators"] = gens;
    return j;
}

ConcreteGroup group_from_json(const json& j) {
    ConcreteGroup cg;
    cg.labels = j.at("labels").get<std::vector<std::string>>();
    cg.table = j.at("table").get<std::vector<std::vector<int>>>();
    for (const auto& [name, g] : j.at("generators").items())
        cg.generator_assignment[name] = g.get<int>();
    cg.compute_inverses();
    cg.validate();
    return cg;
}

std::vector<std::string> matrix_to_strings(const Mat2Z& m) {
    return {m.m11.get_str(), m.m12.get_str(), m.m21.get_str(), m.m22.get_str()};
}

Mat2Z matrix_from_strings(const std::vector<std::string>& v) {
    if (v.size() != 4)
        throw ParseError("matrix needs four entries");
    return {parse_integer(v[0], "matrix entry"), parse_integer(v[1], "matrix entry"),
            parse_integer(v[2], "matrix entry"), parse_integer(v[3], "matrix entry")};
}

json public_key_to_json(const PublicKey& pk) {
    json j;
    j["format"] = 1;
    j["presentation"] = presentation_to_json(pk.presentation);
    j["group"] = group_to_json(pk.group);
    json gens = json::array();
    for (const auto& g : pk.generators) {
        json e;
        e["name"] = g.name;
        e["matrix"] = matrix_to_strings(g.matrix);
        e["element"] = g.element;
        gens.push_back(e);
    }
    j["public_generators"] = gens;
    return j;
}

PublicKey public_key_from_json(const json& j) {
    if (j.at("format").get<int>() != 1)
        throw ParseError("unsupported public key format");
    PublicKey pk;
    pk.presentation = presentation_from_json(j.at("presentation"));
    pk.group = group_from_json(j.at("group"));
    for (const auto& e : j.at("public_generators")) {
        PublicGenerator g;
        g.name = e.at("name").get<std::string>();
        g.matrix = matrix_from_strings(e.at("matrix").get<std::vector<std::string>>());
        g.element = e.at("element").get<int>();
        pk.generators.push_back(std::move(g));
    }
    return pk;
}

} // namespace

std::string format_public_key(const PublicKey& pk) {
    return public_key_to_json(pk).dump(2) + "\n";
}

PublicKey parse_public_key(const std::string& text) {
    try {
        return public_key_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad public key file: ") + e.what());
    }
}

std::string format_secret_key(const SecretKey& sk) {
    json j;
    j["format"] = 1;
    j["n"] = sk.cb.n.get_str();
    std::vector<std::string> s;
    for (const auto& v : sk.cb.s_values)
        s.push_back(v.get_str());
    j["s"] = s;
    json assignment = json::array();
    for (const auto& [name, sv] : sk.assignment)
        assignment.push_back(json::array({name, sv.get_str()}));
    j["assignment"] = assignment;
    json masks = json::array();
    for (const auto& [name, w] : sk.masks)
        masks.push_back(json::array({name, w.to_string()}));
    j["masks"] = masks;
    return j.dump(2) + "\n";
}

SecretKey parse_secret_key(const std::string& text) {
    try {
        json j = json::parse(text);
        if (j.at("format").get<int>() != 1)
            throw ParseError("unsupported secret key format");
        SecretKey sk;
        sk.cb.n = parse_integer(j.at("n").get<std::string>(), "n");
        for (const auto& s : j.at("s").get<std::vector<std::string>>())
            sk.cb.s_values.push_back(parse_integer(s, "s value"));
        for (const auto& e : j.at("assignment"))
            sk.assignment.emplace_back(e.at(0).get<std::string>(),
                                       parse_integer(e.at(1).get<std::string>(), "assignment"));
        for (const auto& e : j.at("masks"))
            sk.masks.emplace_back(e.at(0).get<std::string>(),
                                  parse_word(kRelatorAlphabet, e.at(1).get<std::string>()));
        sk.cb.validate();
        return sk;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad secret key file: ") + e.what());
    }
}

std::string format_ring_public_key(const RingPublicKey& pk) {
    json j;
    j["format"] = 1;
    json ring;
    ring["labels"] = pk.ring.labels;
    ring["add"] = pk.ring.add;
    ring["mul"] = pk.ring.mul;
    ring["zero"] = pk.ring.zero;
    ring["one"] = pk.ring.one;
    j["ring"] = ring;
    j["units"] = pk.units.ring_elements;
    j["group_pk"] = public_key_to_json(pk.group_pk);
    return j.dump(2) + "\n";
}

RingPublicKey parse_ring_public_key(const std::string& text) {
    try {
        json j = json::parse(text);
        if (j.at("format").get<int>() != 1)
            throw ParseError("unsupported ring public key format");
        RingPublicKey pk;
        const json& ring = j.at("ring");
        pk.ring.labels = ring.at("labels").get<std::vector<std::string>>();
        pk.ring.add = ring.at("add").get<std::vector<std::vector<int>>>();
        pk.ring.mul = ring.at("mul").get<std::vector<std::vector<int>>>();
        pk.ring.zero = ring.at("zero").get<int>();
        pk.ring.one = ring.at("one").get<int>();
        pk.ring.validate();
        pk.units.ring_elements = j.at("units").get<std::vector<int>>();
        pk.group_pk = public_key_from_json(j.at("group_pk"));
        // Rebuild the unit-group table view from the ring tables.
        UnitGroup rebuilt = unit_group(pk.ring);
        if (rebuilt.ring_elements != pk.units.ring_elements)
            throw ParseError("unit list does not match the ring tables");
        pk.units = std::move(rebuilt);
        return pk;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ring public key file: ") + e.what());
    }
}

std::string format_group_ring_element(const GroupRingElement& e) {
    std::ostringstream os;
    os << "format: 1\n";
    os << "terms: " << e.terms.size() << '\n';
    for (const auto& [key, term] : e.terms)
        os << "term: " << term.coeff << ' ' << key << '\n';
    return os.str();
}

GroupRingElement parse_group_ring_element(const std::string& text, const FiniteRing& r) {
    LineReader reader(text);
    require_format_1(reader);
    int terms = parse_int(reader.require_key("terms"), "term count");
    GroupRingElement e;
    for (int i = 0; i < terms; ++i) {
        auto toks = split_ws(reader.require_key("term"));
        if (toks.size() != 5)
            throw ParseError("term line needs a coefficient and four matrix entries");
        int coeff = parse_int(toks[0], "coefficient index");
        if (coeff < 0 || coeff >= r.size())
            throw ParseError("coefficient index out of range");
        Mat2Z g{parse_integer(toks[1], "matrix entry"), parse_integer(toks[2], "matrix entry"),
                parse_integer(toks[3], "matrix entry"), parse_integer(toks[4], "matrix entry")};
        e.add_term(g, coeff, r);
    }
    return e;
}

MatZm parse_matzm_file(const std::string& text) {
    LineReader r(text);
    require_format_1(r);
    MatZm m;
    m.n = parse_int(r.require_key("n"), "dimension");
    m.m = parse_int(r.require_key("m"), "modulus");
    auto toks = split_ws(r.require_key("entries"));
    if (static_cast<int>(toks.size()) != m.n * m.n)
        throw ParseError("entry count does not match n*n");
    for (const auto& t : toks)
        m.a.push_back(parse_int(t, "matrix entry"));
    m.reduce();
    return m;
}

std::string format_matzm_file(const MatZm& m) {
    std::ostringstream os;
    os << "format: 1\nn: " << m.n << "\nm: " << m.m << "\nentries:";
    for (auto v : m.a)
        os << ' ' << v;
    os << '\n';
    return os.str();
}

AttackInput parse_attack_input(const std::string& text, const std::string& ring_text) {
    LineReader r(text);
    require_format_1(r);
    AttackInput in;
    PresentedHomomorphism& ph = in.hom;
    ph.n = parse_int(r.require_key("n"), "dimension");
    ph.m = parse_int(r.require_key("m"), "modulus");
    if (ph.n <= 0 || ph.m < 2)
        throw ParseError("attack input needs n >= 1 and m >= 2");
    in.ring_path = r.require_key("ring");
    ph.ring = parse_ring(ring_text);

    auto read_matrix_row = [&](const std::string& line) {
        auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != ph.n * ph.n)
            throw ParseError("matrix line has wrong entry count: " + line);
        MatZm m{ph.n, ph.m, {}};
        for (const auto& t : toks)
            m.a.push_back(parse_int(t, "matrix entry"));
        m.reduce();
        return m;
    };

    int nkernel = parse_int(r.require_key("kernel"), "kernel generator count");
    for (int i = 0; i < nkernel; ++i)
        ph.kernel_generators.push_back(read_matrix_row(r.require("kernel generator row")));

    int ntrans = parse_int(r.require_key("transversal"), "transversal count");
    for (int i = 0; i < ntrans; ++i) {
        std::string line = r.require("transversal row");
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw ParseError("transversal row needs '-> label': " + line);
        ph.transversal.push_back(read_matrix_row(line.substr(0, arrow)));
        auto toks = split_ws(line.substr(arrow + 2));
        if (toks.size() != 1)
            throw ParseError("transversal row needs exactly one image label: " + line);
        int img = ph.ring.index_of_label(toks[0]);
        if (img < 0)
            throw ParseError("unknown ring label in transversal: " + toks[0]);
        ph.images.push_back(img);
    }
    if (ph.transversal.empty())
        throw ParseError("attack input needs a nonempty transversal");
    return in;
}

std::string format_attack_input(const PresentedHomomorphism& ph, const std::string& ring_path) {
    std::ostringstream os;
    os << "format: 1\nn: " << ph.n << "\nm: " << ph.m << "\nring: " << ring_path << '\n';
    os << "kernel: " << ph.kernel_generators.size() << '\n';
    auto put_entries = [&](const MatZm& m) {
        for (std::size_t i = 0; i < m.a.size(); ++i)
            os << (i ? " " : "") << m.a[i];
    };
    for (const auto& k : ph.kernel_generators) {
        put_entries(k);
        os << '\n';
    }
    os << "transversal: " << ph.transversal.size() << '\n';
    for (std::size_t i = 0; i < ph.transversal.size(); ++i) {
        put_entries(ph.transversal[i]);
        os << " -> " << ph.ring.labels[ph.images[i]] << '\n';
    }
    return os.str();
}

} // namespace homcrypt
