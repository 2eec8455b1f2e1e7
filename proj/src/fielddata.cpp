#include "crg/fielddata.hpp"

#include "crg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace crg {

extern const std::string_view kEmbeddedFieldTable;

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

bool is_directive(const std::string& line) { return line.rfind("#complete", 0) == 0; }

Integer parse_integer(const std::string& s, const char* what)
{
    if (s.empty() || !std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        s == "-") {
        throw DataError(std::string("bad ") + what + " '" + s + "'");
    }
    return Integer(s);
}

int parse_small(const std::string& s, const char* what)
{
    const Integer v = parse_integer(s, what);
    if (!v.fits_sint_p()) {
        throw DataError(std::string(what) + " out of range");
    }
    return static_cast<int>(v.get_si());
}

CompletenessDirective parse_directive(const std::string& raw)
{
    // raw still contains whitespace separating key=value tokens.
    std::istringstream in(raw.substr(std::string("#complete").size()));
    CompletenessDirective dir;
    bool have_degree = false;
    bool have_bound = false;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw DataError("directive token '" + token + "' is not key=value");
        }
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "degree") {
            dir.degree = parse_small(value, "degree");
            have_degree = true;
        } else if (key == "up_to") {
            dir.up_to = parse_integer(value, "up_to");
            have_bound = true;
        } else if (key == "signature") {
            if (value != "any" && value != "real") {
                throw DataError("signature must be any or real");
            }
            dir.any_signature = value == "any";
        } else {
            throw DataError("unknown directive key '" + key + "'");
        }
    }
    if (!have_degree || !have_bound || dir.degree < 1 || dir.up_to < 1) {
        throw DataError("directive needs degree >= 1 and up_to >= 1");
    }
    return dir;
}

std::string format_directive(const CompletenessDirective& d)
{
    return "#complete degree=" + std::to_string(d.degree) + " up_to=" + d.up_to.get_str() +
           (d.any_signature ? " signature=any" : "");
}

NumberFieldRecord parse_record(const std::string& line)
{
    const std::vector<std::string> cols = split(line, ',');
    if (cols.size() != 5 && cols.size() != 6) {
        throw DataError("expected 5 or 6 columns, found " + std::to_string(cols.size()));
    }
    NumberFieldRecord rec;
    rec.degree = parse_small(cols[0], "degree");
    rec.discriminant = parse_integer(cols[1], "discriminant");
    rec.r1 = parse_small(cols[2], "r1");
    rec.r2 = parse_small(cols[3], "r2");
    rec.class_number = parse_integer(cols[4], "class number");
    if (rec.degree < 1) {
        throw DataError("degree must be >= 1");
    }
    if (rec.discriminant < 1) {
        throw DataError("discriminant must be >= 1");
    }
    if (rec.r1 < 0 || rec.r2 < 0 || rec.r1 + 2 * rec.r2 != rec.degree) {
        throw DataError("signature (r1, r2) inconsistent with degree");
    }
    if (rec.class_number < 1) {
        throw DataError("class number must be >= 1");
    }
    if (cols.size() == 6 && !cols[5].empty()) {
        rec.polynomial = parse_polynomial(cols[5]);
        if (static_cast<int>(rec.polynomial.size()) - 1 != rec.degree) {
            throw DataError("polynomial degree does not match degree column");
        }
        if (rec.polynomial.back() != 1) {
            throw DataError("polynomial must be monic");
        }
    }
    rec.label = std::to_string(rec.degree) + "." + std::to_string(rec.r1) + "." + rec.discriminant.get_str();
    return rec;
}

using RecordKey = std::tuple<int, Integer, std::string>;

RecordKey key_of(const NumberFieldRecord& r)
{
    return {r.degree, r.discriminant, r.polynomial.empty() ? std::string() : format_polynomial(r.polynomial)};
}

std::string format_record(const NumberFieldRecord& r)
{
    std::string s = std::to_string(r.degree) + "," + r.discriminant.get_str() + "," + std::to_string(r.r1) + "," +
                    std::to_string(r.r2) + "," + r.class_number.get_str();
    if (!r.polynomial.empty()) {
        s += "," + format_polynomial(r.polynomial);
    }
    return s;
}

} // namespace

std::vector<Integer> parse_polynomial(std::string_view text)
{
    const std::string s = strip(text);
    if (s.empty()) {
        throw DataError("empty polynomial");
    }
    std::map<int, Integer> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw DataError("malformed polynomial '" + s + "'");
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i++]);
        }
        Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
        int exponent = 0;
        if (i < s.size() && s[i] == '*') {
            ++i;
            if (digits.empty() || i >= s.size() || s[i] != 'x') {
                throw DataError("malformed polynomial '" + s + "'");
            }
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    e.push_back(s[i++]);
                }
                if (e.empty() || e.size() > 3) {
                    throw DataError("bad exponent in polynomial '" + s + "'");
                }
                exponent = std::stoi(e);
            }
        } else if (digits.empty()) {
            throw DataError("malformed polynomial '" + s + "'");
        }
        terms[exponent] += sign * coeff;
    }
    const int deg = terms.rbegin()->first;
    std::vector<Integer> out(static_cast<std::size_t>(deg) + 1, Integer(0));
    for (const auto& [e, c] : terms) {
        out[static_cast<std::size_t>(e)] = c;
    }
    while (out.size() > 1 && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

std::string format_polynomial(const std::vector<Integer>& c)
{
    std::string s;
    for (std::size_t k = c.size(); k-- > 0;) {
        const Integer& v = c[k];
        if (v == 0) {
            continue;
        }
        if (v < 0) {
            s += "-";
        } else if (!s.empty()) {
            s += "+";
        }
        const Integer mag = abs(v);
        if (k == 0) {
            s += mag.get_str();
        } else {
            if (mag != 1) {
                s += mag.get_str() + "*";
            }
            s += "x";
            if (k > 1) {
                s += "^" + std::to_string(k);
            }
        }
    }
    return s.empty() ? "0" : s;
}

FieldTable FieldTable::parse(std::string_view text, const std::string& source)
{
    FieldTable table;
    std::set<RecordKey> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string compact = strip(raw);
        if (compact.empty()) {
            continue;
        }
        try {
            if (is_directive(compact)) {
                const auto first = raw.find_first_not_of(" \t");
                table.directives_.push_back(parse_directive(raw.substr(first)));
                continue;
            }
            if (compact[0] == '#') {
                continue;
            }
            NumberFieldRecord rec = parse_record(compact);
            rec.line = line_no;
            if (!seen.insert(key_of(rec)).second) {
                throw DataError("duplicate record for (degree, discriminant, polynomial)");
            }
            if (!rec.totally_real()) {
                table.flags_.push_back(source + ":" + std::to_string(line_no) + ": " + rec.label +
                                       " is not totally real; kept for lookups, never used as k");
            }
            table.records_.push_back(std::move(rec));
        } catch (const DataError& e) {
            throw DataError(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    std::sort(table.records_.begin(), table.records_.end(),
              [](const NumberFieldRecord& a, const NumberFieldRecord& b) { return key_of(a) < key_of(b); });
    return table;
}

FieldTable FieldTable::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open field table '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const FieldTable& FieldTable::embedded()
{
    static const FieldTable table = parse(kEmbeddedFieldTable, "<embedded>");
    return table;
}

std::optional<Integer> FieldTable::complete_up_to(int degree, bool any_signature) const
{
    std::optional<Integer> best;
    for (const CompletenessDirective& d : directives_) {
        // signature=any also certifies the totally real subset.
        if (d.degree == degree && (d.any_signature || !any_signature)) {
            if (!best || d.up_to > *best) {
                best = d.up_to;
            }
        }
    }
    return best;
}

namespace {

void require_complete(const FieldTable& t, int degree, const Integer& D_max, bool any_signature, bool best_effort)
{
    if (best_effort) {
        return;
    }
    const auto bound = t.complete_up_to(degree, any_signature);
    if (!bound || D_max > *bound) {
        throw DataError("field table is not certified complete for degree " + std::to_string(degree) +
                        " up to |D| = " + D_max.get_str() +
                        (bound ? " (certified up to " + bound->get_str() + ")" : " (no directive)") +
                        (any_signature ? " for all signatures" : ""));
    }
}

} // namespace

std::vector<NumberFieldRecord> FieldTable::fields_in_range(int degree, const Integer& D_max, bool best_effort) const
{
    require_complete(*this, degree, D_max, false, best_effort);
    std::vector<NumberFieldRecord> out;
    for (const NumberFieldRecord& r : records_) {
        if (r.degree == degree && r.discriminant <= D_max && r.totally_real()) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<NumberFieldRecord> FieldTable::fields_any_signature(int degree, const Integer& D_max,
                                                                bool best_effort) const
{
    require_complete(*this, degree, D_max, true, best_effort);
    std::vector<NumberFieldRecord> out;
    for (const NumberFieldRecord& r : records_) {
        if (r.degree == degree && r.discriminant <= D_max) {
            out.push_back(r);
        }
    }
    return out;
}

std::optional<NumberFieldRecord> FieldTable::find(int degree, const Integer& D) const
{
    for (const NumberFieldRecord& r : records_) {
        if (r.degree == degree && r.discriminant == D && r.totally_real()) {
            return r;
        }
    }
    return std::nullopt;
}

std::string FieldTable::serialize() const
{
    std::vector<std::string> dirs;
    for (const CompletenessDirective& d : directives_) {
        dirs.push_back(format_directive(d));
    }
    std::sort(dirs.begin(), dirs.end());
    std::string out;
    for (const std::string& d : dirs) {
        out += d + "\n";
    }
    for (const NumberFieldRecord& r : records_) {
        out += format_record(r) + "\n";
    }
    return out;
}

std::string normalize_field_stream(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::vector<std::string> dirs;
    std::vector<std::pair<std::tuple<long, Integer, std::string>, std::string>> rows;
    while (std::getline(in, raw)) {
        const std::string compact = strip(raw);
        if (compact.empty()) {
            continue;
        }
        if (is_directive(compact)) {
            // Re-space "key=value" tokens in a fixed order.
            std::istringstream tokens(raw);
            std::string tok;
            std::map<std::string, std::string> kv;
            tokens >> tok;
            while (tokens >> tok) {
                const auto eq = tok.find('=');
                kv[tok.substr(0, eq)] = tok.substr(eq + 1);
            }
            std::string d = "#complete degree=" + kv["degree"] + " up_to=" + kv["up_to"];
            if (kv.count("signature") && kv["signature"] == "any") {
                d += " signature=any";
            }
            dirs.push_back(d);
            continue;
        }
        if (compact[0] == '#') {
            continue;
        }
        std::vector<std::string> cols = split(compact, ',');
        if (cols.size() == 6 && cols[5].empty()) {
            cols.pop_back();
        }
        std::string joined;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            joined += (i ? "," : "") + cols[i];
        }
        rows.push_back({{std::stol(cols[0]), Integer(cols[1]), cols.size() == 6 ? cols[5] : ""}, joined});
    }
    std::sort(dirs.begin(), dirs.end());
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const std::string& d : dirs) {
        out += d + "\n";
    }
    for (const auto& row : rows) {
        out += row.second + "\n";
    }
    return out;
}

Integer odlyzko_min_disc(int degree)
{
    // Lower bounds for |D| of totally real fields. d <= 9: the proven minimal
    // discriminants (Q; Q(√5); the cyclic cubic of conductor 7; the quartic
    // 725; the quintic 14641 = 11^4; sextic 300125; septic 20134393; octic
    // 282300416; nonic 9685993193), which the analytic bounds of Odlyzko
    // certify as minimal. d = 10: ⌊10.5^10⌋ from the unconditional
    // root-discriminant table.
    static const char* const table[] = {"1",        "5",         "49",         "725",         "14641",
                                        "300125",   "20134393",  "282300416",  "9685993193",  "16288946267"};
    if (degree < 1 || degree > 10) {
        throw DomainError("odlyzko_min_disc covers degrees 1..10, got " + std::to_string(degree));
    }
    return Integer(table[degree - 1]);
}

} // namespace crg
