#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g1chow/partitions.hpp"
#include "g1chow/polynomial.hpp"

namespace g1chow {

enum class MinKind { nod, ell };

const char* to_string(MinKind k);

/// One row of the minimal-stratum class table.
struct ClassTableEntry {
    MinKind kind = MinKind::ell;
    int m = 0;
    std::vector<int> shape;  // decreasing part sizes
    IntPolynomial value;     // in l and v
    std::optional<IntPolynomial> schubert;
    std::string note;
};

class ClassTable {
public:
    ClassTable() = default;
    static ClassTable from_json(const std::string& text);

    const std::vector<ClassTableEntry>& entries() const { return entries_; }
    /// nullptr when the table has no such entry.
    const ClassTableEntry* find(MinKind kind, int m, const std::vector<int>& shape) const;

private:
    std::vector<ClassTableEntry> entries_;
};

/// An explicit closure class of an elliptic stratum on the Gorenstein space.
struct ClosureFixture {
    int n = 0;
    SetPartition ell;
    IntPolynomial value;  // in l and t{B}
};

std::vector<ClosureFixture> closure_fixtures_from_json(const std::string& text);

/// Shipped copies of data/min_classes.json and data/ell_classes.json.
const std::string& embedded_min_classes_json();
const std::string& embedded_ell_classes_json();

/// Table used by lookups that do not receive one explicitly. Starts as the
/// embedded table; install a replacement before starting any computation.
const ClassTable& default_class_table();
void install_class_table(ClassTable table);

const std::vector<ClosureFixture>& default_closure_fixtures();
void install_closure_fixtures(std::vector<ClosureFixture> fixtures);

/// Loads min_classes.json and ell_classes.json from a directory and installs them.
void install_fixture_directory(const std::string& dir);

}  // namespace g1chow
