#pragma once

#include "crg/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crg {

struct NumberFieldRecord {
    int degree = 0;
    Integer discriminant = 0;  ///< absolute value |D|
    int r1 = 0;
    int r2 = 0;
    Integer class_number = 1;
    /// Defining polynomial, constant term first; empty when not given.
    std::vector<Integer> polynomial;
    std::string label;
    int line = 0;

    bool totally_real() const { return r2 == 0 && r1 == degree; }
};

/// `#complete degree=<d> up_to=<D> [signature=any]`: every field of degree d
/// with |D| <= up_to is listed (all signatures when signature=any, otherwise
/// the totally real ones).
struct CompletenessDirective {
    int degree = 0;
    Integer up_to = 0;
    bool any_signature = false;
};

/// Parses polynomial text such as "x^4-x^3+2*x-1" (coefficients constant first).
std::vector<Integer> parse_polynomial(std::string_view text);
std::string format_polynomial(const std::vector<Integer>& coefficients);

class FieldTable {
public:
    /// Parses the CSV dialect; throws DataError naming the line on any problem.
    static FieldTable parse(std::string_view text, const std::string& source = "<input>");
    static FieldTable load_file(const std::string& path);
    /// The table shipped with the library.
    static const FieldTable& embedded();

    const std::vector<NumberFieldRecord>& records() const noexcept { return records_; }
    const std::vector<CompletenessDirective>& directives() const noexcept { return directives_; }
    /// Human-readable notes for retained but flagged records (not totally real).
    const std::vector<std::string>& flags() const noexcept { return flags_; }

    /// Largest bound up to which degree-d fields are certified complete.
    std::optional<Integer> complete_up_to(int degree, bool any_signature) const;

    /// Totally real fields of degree d with |D| <= D_max, sorted by |D|.
    /// Throws DataError if D_max exceeds the certified range and best_effort is false.
    std::vector<NumberFieldRecord> fields_in_range(int degree, const Integer& D_max, bool best_effort = false) const;

    /// Fields of any signature with degree d and |D| <= D_max; same completeness rule,
    /// using signature=any directives.
    std::vector<NumberFieldRecord> fields_any_signature(int degree, const Integer& D_max,
                                                        bool best_effort = false) const;

    /// Exact record lookup for a totally real field.
    std::optional<NumberFieldRecord> find(int degree, const Integer& D) const;

    /// Canonical text: directives, then records sorted by (degree, D, polynomial).
    std::string serialize() const;

private:
    std::vector<NumberFieldRecord> records_;
    std::vector<CompletenessDirective> directives_;
    std::vector<std::string> flags_;
};

/// Text-level canonical form of a field stream: comments and blank lines
/// dropped, whitespace removed, directives first, records sorted.
std::string normalize_field_stream(std::string_view text);

/// Stored lower bound for |D| of a totally real field of degree d, 1 <= d <= 10.
Integer odlyzko_min_disc(int degree);
/// Root-discriminant floor used past the stored range.
inline constexpr double kOdlyzkoRootDiscFloor = 10.5;

} // namespace crg
