#include "ineqlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ineqlab {

namespace {

using nlohmann::json;

std::vector<double> read_row(const json& row, std::size_t cols, const char* part) {
    if (!row.is_array() || row.size() != cols) {
        throw InputError(std::string("matrix JSON: every '") + part + "' row must have " + std::to_string(cols) +
                         " entries");
    }
    std::vector<double> out;
    out.reserve(cols);
    for (const json& v : row) {
        if (!v.is_number()) throw InputError(std::string("matrix JSON: non-numeric entry in '") + part + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

std::size_t read_extent(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_number_integer() || it->get<long long>() < 1) {
        throw InputError(std::string("matrix JSON: '") + key + "' must be a positive integer");
    }
    return it->get<std::size_t>();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json vector_to_json(const ComplexVector& v) {
    ComplexMatrix column(v.dim(), 1);
    column.set_column(0, v);
    return matrix_to_json(column);
}

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("matrix JSON: expected an object");
    const std::size_t rows = read_extent(doc, "rows");
    const std::size_t cols = read_extent(doc, "cols");
    const auto re = doc.find("re");
    if (re == doc.end() || !re->is_array() || re->size() != rows) {
        throw InputError("matrix JSON: 're' must be an array of " + std::to_string(rows) + " rows");
    }
    const auto im = doc.find("im");
    const bool has_im = im != doc.end() && !im->is_null();
    if (has_im && (!im->is_array() || im->size() != rows)) {
        throw InputError("matrix JSON: 'im' must be an array of " + std::to_string(rows) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::vector<double> re_row = read_row((*re)[r], cols, "re");
        const std::vector<double> im_row = has_im ? read_row((*im)[r], cols, "im") : std::vector<double>(cols, 0.0);
        for (std::size_t c = 0; c < cols; ++c) entries.emplace_back(re_row[c], im_row[c]);
    }
    try {
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("matrix JSON: ") + e.what());
    } catch (const std::domain_error& e) {
        throw InputError(std::string("matrix JSON: ") + e.what());
    }
}

ComplexVector vector_from_json(const json& doc) {
    const ComplexMatrix m = matrix_from_json(doc);
    if (m.cols() != 1) throw InputError("vector JSON: expected cols = 1, got " + std::to_string(m.cols()));
    return m.column(0);
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace ineqlab
