#include "schatten/matrixio.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace schatten::cli {

CMatrix read_matrix(std::istream& in) {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols))
        throw IoFailure("matrix read: missing 'rows cols' header");
    if (rows <= 0 || cols <= 0)
        throw IoFailure("matrix read: dimensions must be positive");
    std::vector<cplx> entries(std::size_t(rows) * cols);
    for (std::size_t t = 0; t < entries.size(); ++t) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im))
            throw IoFailure("matrix read: truncated entry list");
        entries[t] = cplx{re, im};
    }
    return CMatrix(rows, cols, std::move(entries));
}

CMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    out << std::setprecision(17);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const cplx z = m(i, j);
            out << z.real() << ' ' << z.imag();
            out << (j + 1 == m.cols() ? '\n' : ' ');
        }
    }
}

void write_matrix_file(const std::string& path, const CMatrix& m) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open matrix file for writing: " + path);
    write_matrix(out, m);
    if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace schatten::cli
