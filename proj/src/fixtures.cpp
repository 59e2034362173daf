#include "g1chow/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "g1chow/embedded_data.hpp"

namespace g1chow {

const char* to_string(MinKind k) { return k == MinKind::nod ? "nod" : "ell"; }

namespace {

nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string(what) + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlgebraError("cannot open fixture file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::mutex install_mutex;
std::shared_ptr<const ClassTable> class_table;
std::shared_ptr<const std::vector<ClosureFixture>> closures;

}  // namespace

ClassTable ClassTable::from_json(const std::string& text) {
    auto j = parse_json(text, "class table");
    ClassTable t;
    for (const auto& e : j.at("classes")) {
        ClassTableEntry row;
        std::string kind = e.at("kind").get<std::string>();
        if (kind == "nod") row.kind = MinKind::nod;
        else if (kind == "ell") row.kind = MinKind::ell;
        else throw AlgebraError("class table: unknown kind " + kind);
        row.m = e.at("m").get<int>();
        row.shape = e.at("shape").get<std::vector<int>>();
        std::sort(row.shape.rbegin(), row.shape.rend());
        row.value = IntPolynomial::parse(e.at("class").get<std::string>());
        if (e.contains("schubert")) row.schubert = IntPolynomial::parse(e.at("schubert").get<std::string>());
        if (e.contains("note")) row.note = e.at("note").get<std::string>();
        int total = 0;
        for (int p : row.shape) total += p;
        if (total != row.m) throw AlgebraError("class table: shape does not add up to m");
        if (t.find(row.kind, row.m, row.shape)) throw AlgebraError("class table: duplicate entry");
        t.entries_.push_back(std::move(row));
    }
    return t;
}

const ClassTableEntry* ClassTable::find(MinKind kind, int m, const std::vector<int>& shape) const {
    for (const auto& e : entries_)
        if (e.kind == kind && e.m == m && e.shape == shape) return &e;
    return nullptr;
}

std::vector<ClosureFixture> closure_fixtures_from_json(const std::string& text) {
    auto j = parse_json(text, "closure fixtures");
    std::vector<ClosureFixture> out;
    for (const auto& e : j.at("classes")) {
        ClosureFixture f;
        f.n = e.at("n").get<int>();
        f.ell = SetPartition::parse(e.at("ell").get<std::string>(), f.n);
        f.value = IntPolynomial::parse(e.at("class").get<std::string>());
        out.push_back(std::move(f));
    }
    return out;
}

const std::string& embedded_min_classes_json() {
    static const std::string s = embedded::kMinClassesJson;
    return s;
}

const std::string& embedded_ell_classes_json() {
    static const std::string s = embedded::kEllClassesJson;
    return s;
}

const ClassTable& default_class_table() {
    std::lock_guard lock(install_mutex);
    if (!class_table) class_table = std::make_shared<const ClassTable>(ClassTable::from_json(embedded_min_classes_json()));
    return *class_table;
}

void install_class_table(ClassTable table) {
    std::lock_guard lock(install_mutex);
    class_table = std::make_shared<const ClassTable>(std::move(table));
}

const std::vector<ClosureFixture>& default_closure_fixtures() {
    std::lock_guard lock(install_mutex);
    if (!closures) closures = std::make_shared<const std::vector<ClosureFixture>>(closure_fixtures_from_json(embedded_ell_classes_json()));
    return *closures;
}

void install_closure_fixtures(std::vector<ClosureFixture> fixtures) {
    std::lock_guard lock(install_mutex);
    closures = std::make_shared<const std::vector<ClosureFixture>>(std::move(fixtures));
}

void install_fixture_directory(const std::string& dir) {
    auto table = ClassTable::from_json(read_file(dir + "/min_classes.json"));
    auto fixtures = closure_fixtures_from_json(read_file(dir + "/ell_classes.json"));
    install_class_table(std::move(table));
    install_closure_fixtures(std::move(fixtures));
}

}  // namespace g1chow
