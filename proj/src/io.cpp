#include "fdalg/io.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "fdalg/error.hpp"

namespace fdalg {

namespace {

using json = nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        for (std::size_t i = 0; i < upto; ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(line, "malformed JSON");
    }
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(0, where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(0, where + ": missing key '" + key + "'");
    return *it;
}

const json& array_at(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(0, where + ": expected an array");
    return v;
}

std::size_t index_of(const json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(0, where + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

Scalar literal(const json& v, const Field& field, const std::string& where) {
    std::string text;
    if (v.is_string()) text = v.get<std::string>();
    else if (v.is_number_integer()) text = v.dump();
    else throw ParseError(0, where + ": expected a rational literal, got " + v.dump());
    try {
        return Scalar::parse(text, field);
    } catch (const std::exception& e) {
        throw ParseError(0, where + ": bad literal '" + text + "': " + e.what());
    }
}

Field field_of(const json& doc, const std::string& where) {
    auto it = doc.find("field");
    if (it == doc.end()) return Field::rational();
    if (!it->is_string()) throw ParseError(0, where + ".field: expected a string");
    try {
        return Field::parse(it->get<std::string>());
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, where + ".field: " + e.what());
    }
}

std::string quoted(const Scalar& s) { return "\"" + s.to_string() + "\""; }

Matrix matrix_from(const json& doc, const Field& field) {
    const json& rows = array_at(member(doc, "rows", "map"), "map.rows");
    if (rows.empty()) throw ParseError(0, "map.rows: no rows");
    std::vector<Vec> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string where = "map.rows[" + std::to_string(r) + "]";
        const json& row = array_at(rows[r], where);
        if (row.size() != rows[0].size()) throw ValidationError("shape", where + " has a different length");
        Vec v;
        for (std::size_t c = 0; c < row.size(); ++c)
            v.push_back(literal(row[c], field, where + "[" + std::to_string(c) + "]"));
        out.push_back(std::move(v));
    }
    return Matrix::from_rows(out, field);
}

void flatten_table(const json& node, std::size_t depth, std::size_t carrier, const std::string& where,
                   std::vector<std::size_t>& out) {
    const json& arr = array_at(node, where);
    if (arr.size() != carrier)
        throw ValidationError("table", where + " has " + std::to_string(arr.size()) + " entries, expected " +
                                           std::to_string(carrier));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (depth == 1) out.push_back(index_of(arr[i], at));
        else flatten_table(arr[i], depth - 1, carrier, at, out);
    }
}

OpTable table_from(const json& doc, const char* key, std::size_t carrier) {
    const std::string where = std::string("ops.") + key;
    const json& op = member(doc, key, "ops");
    const std::size_t arity = index_of(member(op, "arity", where), where + ".arity");
    if (arity == 0) throw ValidationError("arity", where + ": arity must be at least 1");
    std::vector<std::size_t> values;
    flatten_table(member(op, "table", where), arity, carrier, where + ".table", values);
    return OpTable(carrier, arity, std::move(values));
}

void write_table(std::ostream& out, const OpTable& t, std::size_t depth, std::size_t& pos) {
    out << '[';
    for (std::size_t i = 0; i < t.carrier_size(); ++i) {
        if (i) out << ", ";
        if (depth == 1) out << t.values()[pos++];
        else write_table(out, t, depth - 1, pos);
    }
    out << ']';
}

} // namespace

AlgebraPtr parse_algebra(std::string_view text) {
    const json doc = parse_json(text);
    const json& name = member(doc, "name", "algebra");
    if (!name.is_string()) throw ParseError(0, "algebra.name: expected a string");
    const Field field = field_of(doc, "algebra");
    if (doc.find("field") == doc.end()) throw ParseError(0, "algebra: missing key 'field'");
    const std::size_t n = index_of(member(doc, "dim", "algebra"), "algebra.dim");
    if (n == 0) throw ValidationError("dimension", "algebra dimension must be at least 1");

    std::optional<std::size_t> unit;
    if (auto it = doc.find("unit"); it != doc.end() && !it->is_null()) unit = index_of(*it, "algebra.unit");

    std::vector<Scalar> constants(n * n * n, Scalar::zero(field));
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    const json& list = array_at(member(doc, "constants", "algebra"), "algebra.constants");
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string where = "algebra.constants[" + std::to_string(e) + "]";
        const json& entry = array_at(list[e], where);
        if (entry.size() != 4) throw ParseError(0, where + ": expected [i, j, k, value]");
        const std::size_t i = index_of(entry[0], where), j = index_of(entry[1], where), k = index_of(entry[2], where);
        if (i >= n || j >= n || k >= n) throw ValidationError("constants", where + ": index out of range");
        if (!seen.emplace(i, j, k).second)
            throw ValidationError("constants", where + ": duplicate entry for (" + std::to_string(i) + "," +
                                                   std::to_string(j) + "," + std::to_string(k) + ")");
        constants[(i * n + j) * n + k] = literal(entry[3], field, where);
    }
    return make_algebra(name.get<std::string>(), field, n, std::move(constants), unit);
}

AlgebraPtr load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

void save_algebra(const Algebra& alg, std::ostream& out) {
    const std::size_t n = alg.dim();
    out << "{\n  \"name\": " << json(alg.name()).dump() << ",\n  \"field\": \"" << alg.field().name()
        << "\",\n  \"dim\": " << n << ",\n";
    if (alg.unit()) out << "  \"unit\": " << *alg.unit() << ",\n";
    out << "  \"constants\": [";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = alg.c(i, j, k);
                if (c.is_zero()) continue;
                out << (first ? "\n    " : ",\n    ") << '[' << i << ", " << j << ", " << k << ", " << quoted(c)
                    << ']';
                first = false;
            }
    out << "\n  ]\n}\n";
}

Matrix parse_matrix(std::string_view text) {
    const json doc = parse_json(text);
    return matrix_from(doc, field_of(doc, "map"));
}

Matrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

LinearMap parse_map(std::string_view text, const AlgebraPtr& source, const AlgebraPtr& target) {
    const json doc = parse_json(text);
    const Field field = doc.contains("field") ? field_of(doc, "map") : source->field();
    if (field != source->field()) throw ValidationError("field", "map declares " + field.name() + ", algebra is over " +
                                                                     source->field().name());
    Matrix m = matrix_from(doc, field);
    if (m.rows() != target->dim() || m.cols() != source->dim())
        throw ValidationError("shape", "map is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                           ", expected " + std::to_string(target->dim()) + "x" +
                                           std::to_string(source->dim()));
    return LinearMap(source, target, std::move(m));
}

LinearMap load_map(const std::filesystem::path& path, const AlgebraPtr& source, const AlgebraPtr& target) {
    return parse_map(read_file(path), source, target);
}

void save_map(const LinearMap& f, std::ostream& out) {
    const Matrix& m = f.coords();
    out << "{\n  \"field\": \"" << f.field().name() << "\",\n  \"rows\": [";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << quoted(m(r, c));
        out << ']';
    }
    out << "\n  ]\n}\n";
}

Tensor parse_tensor(std::string_view text, const std::vector<AlgebraPtr>& factors) {
    const json doc = parse_json(text);
    const Field field = doc.contains("field") ? field_of(doc, "tensor") : factors.front()->field();
    if (field != factors.front()->field())
        throw ValidationError("field", "tensor declares " + field.name() + ", algebra is over " +
                                           factors.front()->field().name());
    Tensor shape = Tensor::zero(factors);
    if (auto it = doc.find("shape"); it != doc.end()) {
        const json& dims = array_at(*it, "tensor.shape");
        bool ok = dims.size() == factors.size();
        for (std::size_t s = 0; ok && s < dims.size(); ++s) ok = index_of(dims[s], "tensor.shape") == factors[s]->dim();
        if (!ok) throw ValidationError("shape", "tensor.shape does not match the algebras");
    }

    Vec comps = shape.components();
    std::vector<bool> seen(comps.size(), false);
    const json& entries = array_at(member(doc, "entries", "tensor"), "tensor.entries");
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string where = "tensor.entries[" + std::to_string(e) + "]";
        const json& entry = array_at(entries[e], where);
        if (entry.size() != 2) throw ParseError(0, where + ": expected [[indices], value]");
        const json& idx = array_at(entry[0], where + "[0]");
        if (idx.size() != factors.size())
            throw ValidationError("shape", where + ": expected " + std::to_string(factors.size()) + " indices");
        std::vector<std::size_t> index;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            index.push_back(index_of(idx[s], where));
            if (index.back() >= factors[s]->dim()) throw ValidationError("shape", where + ": index out of range");
        }
        const std::size_t flat = shape.flat_index(index);
        if (seen[flat]) throw ValidationError("entries", where + ": duplicate index");
        seen[flat] = true;
        comps[flat] = literal(entry[1], field, where);
    }
    return Tensor(factors, std::move(comps));
}

Tensor load_tensor(const std::filesystem::path& path, const std::vector<AlgebraPtr>& factors) {
    return parse_tensor(read_file(path), factors);
}

void save_tensor(const Tensor& t, std::ostream& out) {
    out << "{\n  \"field\": \"" << t.field().name() << "\",\n  \"shape\": [";
    for (std::size_t s = 0; s < t.order(); ++s) out << (s ? ", " : "") << t.factors()[s]->dim();
    out << "],\n  \"entries\": [";
    bool first = true;
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        if (t[flat].is_zero()) continue;
        out << (first ? "\n    [[" : ",\n    [[");
        const auto index = t.multi_index(flat);
        for (std::size_t s = 0; s < index.size(); ++s) out << (s ? ", " : "") << index[s];
        out << "], " << quoted(t[flat]) << ']';
        first = false;
    }
    out << "\n  ]\n}\n";
}

FiniteOpAlgebra parse_optable(std::string_view text) {
    const json doc = parse_json(text);
    const std::size_t carrier = index_of(member(doc, "carrier", "ops"), "ops.carrier");
    if (carrier == 0) throw ValidationError("carrier", "carrier must be nonempty");
    return FiniteOpAlgebra(table_from(doc, "op1", carrier), table_from(doc, "op2", carrier));
}

FiniteOpAlgebra load_optable(const std::filesystem::path& path) { return parse_optable(read_file(path)); }

void save_optable(const FiniteOpAlgebra& alg, std::ostream& out) {
    out << "{\n  \"carrier\": " << alg.carrier_size() << ",\n";
    const OpTable* ops[2] = {&alg.op1, &alg.op2};
    for (int k = 0; k < 2; ++k) {
        std::size_t pos = 0;
        out << "  \"op" << (k + 1) << "\": {\"arity\": " << ops[k]->arity() << ", \"table\": ";
        write_table(out, *ops[k], ops[k]->arity(), pos);
        out << "}" << (k == 0 ? ",\n" : "\n");
    }
    out << "}\n";
}

} // namespace fdalg
