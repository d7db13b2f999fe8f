#include "gdd/formats.hpp"

#include <sstream>

namespace gdd {

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

struct Lines {
    std::vector<std::pair<size_t, std::string>> rows; // (line number, content)
    size_t pos = 0;

    explicit Lines(const std::string& text) {
        std::istringstream is(text);
        std::string raw;
        size_t n = 0;
        while (std::getline(is, raw)) {
            ++n;
            // strip comments and surrounding whitespace
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            size_t e = raw.find_last_not_of(" \t\r");
            rows.emplace_back(n, raw.substr(b, e - b + 1));
        }
    }
    bool done() const { return pos >= rows.size(); }
    const std::pair<size_t, std::string>& peek() const {
        if (done()) fail(ErrorCode::ParseError, "unexpected end of document");
        return rows[pos];
    }
    std::pair<size_t, std::string> next() {
        auto r = peek();
        ++pos;
        return r;
    }
};

int64_t parse_int(size_t line, const std::string& s) {
    size_t idx = 0;
    try {
        int64_t v = std::stoll(s, &idx);
        if (idx != s.size()) parse_fail(line, "trailing characters after integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        parse_fail(line, "expected an integer, got '" + s + "'");
    }
}

// "key = value" with an exact key
std::string expect_kv(Lines& in, const std::string& key) {
    auto [line, row] = in.next();
    std::string prefix = key + " = ";
    if (row.rfind(prefix, 0) != 0) parse_fail(line, "expected '" + key + " = ...'");
    return row.substr(prefix.size());
}

// "(c0, c1, ...)" -> integer list
std::vector<int64_t> parse_tuple(size_t line, const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        parse_fail(line, "expected a parenthesized tuple, got '" + s + "'");
    std::vector<int64_t> out;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        if (b == std::string::npos) parse_fail(line, "empty tuple entry");
        size_t e = item.find_last_not_of(" \t");
        out.push_back(parse_int(line, item.substr(b, e - b + 1)));
    }
    if (out.empty()) parse_fail(line, "empty tuple");
    return out;
}

std::string render_tuple(const std::vector<int64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

FieldSpecPtr parse_header(Lines& in, int64_t& p_out) {
    size_t pline = in.peek().first;
    int64_t p = parse_int(pline, expect_kv(in, "p"));
    size_t kline = in.peek().first;
    int64_t k = parse_int(kline, expect_kv(in, "k"));
    size_t mline = in.peek().first;
    std::vector<int64_t> modulus = parse_tuple(mline, expect_kv(in, "modulus"));
    if (static_cast<int64_t>(modulus.size()) != k + 1)
        parse_fail(mline, "modulus needs k+1 coefficients");
    for (int64_t c : modulus)
        if (c < 0 || c >= p) parse_fail(mline, "modulus coefficient not reduced mod p");
    p_out = p;
    try {
        return FieldSpec::with_modulus(p, modulus);
    } catch (const Error& e) {
        parse_fail(mline, e.what());
    }
}

FieldElement parse_element(size_t line, const FieldSpecPtr& spec, const std::string& s) {
    std::vector<int64_t> c = parse_tuple(line, s);
    if (static_cast<int>(c.size()) != spec->k()) parse_fail(line, "pole needs k coefficients");
    for (int64_t v : c)
        if (v < 0 || v >= spec->p()) parse_fail(line, "coefficient not reduced");
    return FieldElement(spec, std::move(c));
}

// splits "pole = (...), residue = h" style rows on the top-level commas
std::vector<std::string> split_fields(size_t line, const std::string& row) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : row) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += ch;
    }
    out.push_back(cur);
    for (auto& f : out) {
        size_t b = f.find_first_not_of(" \t");
        if (b == std::string::npos) parse_fail(line, "empty field");
        size_t e = f.find_last_not_of(" \t");
        f = f.substr(b, e - b + 1);
    }
    return out;
}

std::string field_value(size_t line, const std::string& field, const std::string& key) {
    std::string prefix = key + " = ";
    if (field.rfind(prefix, 0) != 0) parse_fail(line, "expected '" + key + " = ...'");
    return field.substr(prefix.size());
}

} // namespace

DocKind sniff_kind(const std::string& text) {
    Lines in(text);
    if (in.done()) fail(ErrorCode::ParseError, "empty document");
    const std::string& head = in.peek().second;
    if (head == "gdd-datum v1") return DocKind::Datum;
    if (head == "gdd-lspace v1") return DocKind::LSpace;
    fail(ErrorCode::ParseError, "line 1: unknown document header '" + head + "'");
}

CharacterizingDatum parse_datum(const std::string& text) {
    Lines in(text);
    auto [hline, head] = in.next();
    if (head != "gdd-datum v1") parse_fail(hline, "expected header 'gdd-datum v1'");
    int64_t p = 0;
    FieldSpecPtr spec = parse_header(in, p);
    std::vector<DatumPair> pairs;
    while (!in.done()) {
        auto [line, row] = in.next();
        auto fields = split_fields(line, row);
        if (fields.size() != 2) parse_fail(line, "expected 'pole = (...), residue = h'");
        FieldElement pole = parse_element(line, spec, field_value(line, fields[0], "pole"));
        int64_t res = parse_int(line, field_value(line, fields[1], "residue"));
        if (res <= 0 || res >= p) parse_fail(line, "residue must be nonzero mod p and reduced");
        pairs.push_back({std::move(pole), res});
    }
    if (pairs.empty()) fail(ErrorCode::ParseError, "datum has no poles");
    return CharacterizingDatum(spec, std::move(pairs));
}

std::string serialize_datum(const CharacterizingDatum& d) {
    std::ostringstream os;
    const FieldSpecPtr& spec = d.spec();
    os << "gdd-datum v1\n";
    os << "p = " << spec->p() << "\n";
    os << "k = " << spec->k() << "\n";
    os << "modulus = " << render_tuple(spec->modulus()) << "\n";
    for (const auto& pr : d.pairs())
        os << "pole = " << render_tuple(pr.pole.coeffs()) << ", residue = " << pr.residue << "\n";
    return os.str();
}

LSpaceCandidate parse_lspace(const std::string& text) {
    Lines in(text);
    auto [hline, head] = in.next();
    if (head != "gdd-lspace v1") parse_fail(hline, "expected header 'gdd-lspace v1'");
    size_t pline = in.peek().first;
    int64_t p = parse_int(pline, expect_kv(in, "p"));
    size_t lline = in.peek().first;
    int64_t lambda = parse_int(lline, expect_kv(in, "lambda"));
    size_t kline = in.peek().first;
    int64_t k = parse_int(kline, expect_kv(in, "k"));
    size_t mline = in.peek().first;
    std::vector<int64_t> modulus = parse_tuple(mline, expect_kv(in, "modulus"));
    if (static_cast<int64_t>(modulus.size()) != k + 1)
        parse_fail(mline, "modulus needs k+1 coefficients");
    for (int64_t c : modulus)
        if (c < 0 || c >= p) parse_fail(mline, "modulus coefficient not reduced mod p");
    FieldSpecPtr spec;
    try {
        spec = FieldSpec::with_modulus(p, modulus);
    } catch (const Error& e) {
        parse_fail(mline, e.what());
    }
    size_t uline = in.peek().first;
    FieldElement u = parse_element(uline, spec, expect_kv(in, "u"));
    size_t vline = in.peek().first;
    FieldElement v = parse_element(vline, spec, expect_kv(in, "v"));

    std::vector<std::vector<FieldElement>> sets(static_cast<size_t>(p) + 1);
    std::vector<std::vector<int64_t>> r1(static_cast<size_t>(p) + 1),
        r2(static_cast<size_t>(p) + 1);
    std::vector<bool> seen(static_cast<size_t>(p) + 1, false);
    int current = -1;
    while (!in.done()) {
        auto [line, row] = in.next();
        if (row.rfind("set X", 0) == 0) {
            int64_t j = parse_int(line, row.substr(5));
            if (j < 0 || j > p) parse_fail(line, "set index out of range");
            if (seen[static_cast<size_t>(j)]) parse_fail(line, "duplicate section header");
            seen[static_cast<size_t>(j)] = true;
            current = static_cast<int>(j);
            continue;
        }
        if (current < 0) parse_fail(line, "pole outside of a set section");
        auto fields = split_fields(line, row);
        if (fields.size() != 3) parse_fail(line, "expected 'pole = (...), r1 = h, r2 = h'");
        FieldElement pole = parse_element(line, spec, field_value(line, fields[0], "pole"));
        int64_t h1 = parse_int(line, field_value(line, fields[1], "r1"));
        int64_t h2 = parse_int(line, field_value(line, fields[2], "r2"));
        if (h1 < 0 || h1 >= p || h2 < 0 || h2 >= p) parse_fail(line, "residue not reduced mod p");
        sets[static_cast<size_t>(current)].push_back(std::move(pole));
        r1[static_cast<size_t>(current)].push_back(h1);
        r2[static_cast<size_t>(current)].push_back(h2);
    }
    for (int64_t j = 0; j <= p; ++j) {
        if (!seen[static_cast<size_t>(j)])
            fail(ErrorCode::ParseError, "missing section X" + std::to_string(j));
        if (static_cast<int64_t>(sets[static_cast<size_t>(j)].size()) != lambda)
            fail(ErrorCode::ParseError,
                 "section X" + std::to_string(j) + " needs lambda = " + std::to_string(lambda) +
                     " poles");
    }
    return LSpaceCandidate(p, static_cast<int>(lambda), spec, std::move(sets), std::move(r1),
                           std::move(r2), std::move(u), std::move(v));
}

std::string serialize_lspace(const LSpaceCandidate& c) {
    std::ostringstream os;
    const FieldSpecPtr& spec = c.spec();
    os << "gdd-lspace v1\n";
    os << "p = " << c.p() << "\n";
    os << "lambda = " << c.lambda() << "\n";
    os << "k = " << spec->k() << "\n";
    os << "modulus = " << render_tuple(spec->modulus()) << "\n";
    os << "u = " << render_tuple(c.u().coeffs()) << "\n";
    os << "v = " << render_tuple(c.v().coeffs()) << "\n";
    for (int j = 0; j <= c.p(); ++j) {
        os << "set X" << j << "\n";
        for (int i = 0; i < c.lambda(); ++i)
            os << "pole = "
               << render_tuple(c.pole_sets()[static_cast<size_t>(j)][static_cast<size_t>(i)].coeffs())
               << ", r1 = " << c.r1()[static_cast<size_t>(j)][static_cast<size_t>(i)]
               << ", r2 = " << c.r2()[static_cast<size_t>(j)][static_cast<size_t>(i)] << "\n";
    }
    return os.str();
}

Checkpoint parse_checkpoint(const std::string& text) {
    Lines in(text);
    auto [hline, head] = in.next();
    if (head != "gdd-checkpoint v1") parse_fail(hline, "expected header 'gdd-checkpoint v1'");
    Checkpoint cp;
    cp.command = expect_kv(in, "command");
    cp.params = expect_kv(in, "params");
    while (!in.done()) {
        auto [line, row] = in.next();
        // "shard I of N: done = C"
        std::istringstream is(row);
        std::string w;
        int64_t idx, total, count;
        is >> w >> idx;
        if (w != "shard") parse_fail(line, "expected 'shard I of N: done = C'");
        is >> w >> total;
        std::string rest;
        std::getline(is, rest);
        size_t eq = rest.find("done = ");
        if (w != "of" || eq == std::string::npos) parse_fail(line, "malformed shard row");
        count = parse_int(line, rest.substr(eq + 7));
        if (static_cast<int64_t>(cp.done.size()) != idx) parse_fail(line, "shard rows out of order");
        cp.done.push_back(count);
        if (total <= 0 || idx >= total) parse_fail(line, "shard index out of range");
    }
    return cp;
}

std::string serialize_checkpoint(const Checkpoint& c) {
    std::ostringstream os;
    os << "gdd-checkpoint v1\n";
    os << "command = " << c.command << "\n";
    os << "params = " << c.params << "\n";
    for (size_t i = 0; i < c.done.size(); ++i)
        os << "shard " << i << " of " << c.done.size() << ": done = " << c.done[i] << "\n";
    return os.str();
}

} // namespace gdd
