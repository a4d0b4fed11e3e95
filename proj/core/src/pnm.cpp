#include "glyphgeom/pnm.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "glyphgeom/errors.hpp"

namespace glyphgeom {

namespace {

// Cursor over the input bytes; every throw names the current offset.
struct Reader {
    const std::vector<uint8_t>& data;
    size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    uint8_t peek() const { return data[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    static bool is_space(uint8_t c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }

    // Whitespace and '#' comments (comments run to end of line).
    void skip_space_and_comments() {
        while (!eof()) {
            if (is_space(peek())) {
                ++pos;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n' && peek() != '\r') ++pos;
            } else {
                break;
            }
        }
    }

    int read_uint(const char* what) {
        skip_space_and_comments();
        if (eof()) fail(std::string("missing ") + what);
        if (peek() < '0' || peek() > '9') fail(std::string("expected digit in ") + what);
        long val = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            val = val * 10 + (peek() - '0');
            if (val > std::numeric_limits<int>::max()) fail(std::string(what) + " out of range");
            ++pos;
        }
        return int(val);
    }
};

// Header dimensions get a sanity cap so a corrupt file cannot ask for
// gigabytes.
constexpr long kMaxPixels = 64L * 1024 * 1024;

void check_dims(Reader& r, int cols, int rows) {
    if (cols <= 0 || rows <= 0) r.fail("image dimensions must be positive");
    if (long(cols) * rows > kMaxPixels) r.fail("image dimensions unreasonably large");
}

int rescale_gray(long v, int maxval) {
    if (maxval == 255) return int(v);
    return int((v * 255 + maxval / 2) / maxval);
}

ParsedImage parse_pnm(Reader& r) {
    if (r.data.size() < 2 || r.data[0] != 'P') r.fail("missing PNM magic number");
    const char kind = char(r.data[1]);
    r.pos = 2;
    if (kind != '1' && kind != '2' && kind != '4' && kind != '5')
        r.fail("unsupported PNM type (want P1, P2, P4 or P5)");

    const int cols = r.read_uint("width");
    const int rows = r.read_uint("height");
    check_dims(r, cols, rows);

    const bool is_gray = (kind == '2' || kind == '5');
    int maxval = 1;
    if (is_gray) {
        maxval = r.read_uint("maxval");
        if (maxval < 1 || maxval > 65535) r.fail("maxval out of range 1..65535");
    }

    if (kind == '1') {
        BitGrid img(rows, cols);
        for (int y = 0; y < rows; ++y)
            for (int x = 0; x < cols; ++x) {
                r.skip_space_and_comments();
                if (r.eof()) r.fail("truncated P1 raster");
                const uint8_t c = r.peek();
                if (c != '0' && c != '1') r.fail("P1 raster byte is not 0 or 1");
                img.set(y, x, c == '1');
                ++r.pos;
            }
        return img;
    }

    if (kind == '2') {
        GrayGrid img(rows, cols);
        for (int y = 0; y < rows; ++y)
            for (int x = 0; x < cols; ++x) {
                const int v = r.read_uint("P2 sample");
                if (v > maxval) r.fail("P2 sample exceeds maxval");
                img.set(y, x, uint8_t(rescale_gray(v, maxval)));
            }
        return img;
    }

    // Binary variants: exactly one whitespace byte separates the
    // header from the raster.
    if (r.eof() || !Reader::is_space(r.peek())) r.fail("expected single whitespace before raster");
    ++r.pos;

    if (kind == '4') {
        BitGrid img(rows, cols);
        const size_t row_bytes = size_t(cols + 7) / 8;
        for (int y = 0; y < rows; ++y) {
            if (r.pos + row_bytes > r.data.size()) r.fail("truncated P4 raster");
            for (int x = 0; x < cols; ++x) {
                const uint8_t byte = r.data[r.pos + size_t(x) / 8];
                img.set(y, x, (byte >> (7 - x % 8)) & 1);
            }
            r.pos += row_bytes;
        }
        return img;
    }

    // P5
    GrayGrid img(rows, cols);
    const int bpc = maxval > 255 ? 2 : 1;
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x < cols; ++x) {
            if (r.pos + bpc > r.data.size()) r.fail("truncated P5 raster");
            long v = r.data[r.pos];
            if (bpc == 2) v = (v << 8) | r.data[r.pos + 1];
            r.pos += bpc;
            if (v > maxval) r.fail("P5 sample exceeds maxval");
            img.set(y, x, uint8_t(rescale_gray(v, maxval)));
        }
    return img;
}

BitGrid parse_text_matrix(Reader& r) {
    std::vector<std::vector<uint8_t>> matrix;
    std::vector<uint8_t> line;
    bool any_token = false;

    auto end_line = [&]() {
        if (!line.empty()) {
            if (!matrix.empty() && line.size() != matrix.front().size())
                r.fail("ragged text matrix: line length " + std::to_string(line.size()) +
                       " != " + std::to_string(matrix.front().size()));
            matrix.push_back(std::move(line));
            line.clear();
        }
    };

    while (!r.eof()) {
        const uint8_t c = r.peek();
        if (c == '\n' || c == '\r') {
            end_line();
            ++r.pos;
        } else if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
            ++r.pos;
        } else if (c == '0' || c == '1') {
            line.push_back(c == '1');
            any_token = true;
            ++r.pos;
            if (!r.eof() && !Reader::is_space(r.peek()))
                r.fail("text matrix tokens must be single 0/1 digits");
        } else {
            r.fail("text matrix token is not 0 or 1");
        }
    }
    end_line();

    if (!any_token) r.fail("empty text matrix");

    BitGrid img(int(matrix.size()), int(matrix.front().size()));
    for (size_t y = 0; y < matrix.size(); ++y)
        for (size_t x = 0; x < matrix[y].size(); ++x)
            img.set(int(y), int(x), matrix[y][x] != 0);
    return img;
}

} // namespace

ParsedImage parse_image(const std::vector<uint8_t>& bytes, ImageFormat format) {
    Reader r{bytes};
    if (bytes.empty()) r.fail("empty input");

    switch (format) {
    case ImageFormat::pbm:
    case ImageFormat::pgm: {
        ParsedImage img = parse_pnm(r);
        const bool got_gray = std::holds_alternative<GrayGrid>(img);
        if (got_gray != (format == ImageFormat::pgm))
            throw ParseError(got_gray ? "expected PBM, found PGM" : "expected PGM, found PBM", 0);
        return img;
    }
    case ImageFormat::text_matrix:
        return parse_text_matrix(r);
    }
    throw ParseError("unknown format", 0);
}

ImageFormat detect_format(const std::vector<uint8_t>& bytes) {
    if (bytes.size() >= 2 && bytes[0] == 'P') {
        if (bytes[1] == '1' || bytes[1] == '4') return ImageFormat::pbm;
        if (bytes[1] == '2' || bytes[1] == '5') return ImageFormat::pgm;
    }
    return ImageFormat::text_matrix;
}

BitGrid binarize(const GrayGrid& gray, int threshold) {
    BitGrid out(gray.rows(), gray.cols());
    for (int r = 0; r < gray.rows(); ++r)
        for (int c = 0; c < gray.cols(); ++c)
            out.set(r, c, gray.at(r, c) < threshold);
    return out;
}

std::string write_pbm(const BitGrid& img, bool binary) {
    std::ostringstream os;
    os << (binary ? "P4" : "P1") << '\n' << img.cols() << ' ' << img.rows() << '\n';
    if (binary) {
        const int row_bytes = (img.cols() + 7) / 8;
        for (int r = 0; r < img.rows(); ++r) {
            std::string row(size_t(row_bytes), '\0');
            for (int c = 0; c < img.cols(); ++c)
                if (img.at(r, c)) row[size_t(c) / 8] |= char(0x80 >> (c % 8));
            os << row;
        }
    } else {
        for (int r = 0; r < img.rows(); ++r) {
            for (int c = 0; c < img.cols(); ++c) {
                if (c) os << ' ';
                os << (img.at(r, c) ? '1' : '0');
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string write_pgm(const GrayGrid& img, bool binary) {
    std::ostringstream os;
    os << (binary ? "P5" : "P2") << '\n' << img.cols() << ' ' << img.rows() << "\n255\n";
    if (binary) {
        for (int r = 0; r < img.rows(); ++r)
            for (int c = 0; c < img.cols(); ++c)
                os << char(img.at(r, c));
    } else {
        for (int r = 0; r < img.rows(); ++r) {
            for (int c = 0; c < img.cols(); ++c) {
                if (c) os << ' ';
                os << int(img.at(r, c));
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string write_text_matrix(const BitGrid& img) {
    std::ostringstream os;
    for (int r = 0; r < img.rows(); ++r) {
        for (int c = 0; c < img.cols(); ++c) {
            if (c) os << ' ';
            os << (img.at(r, c) ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

BitGrid load_bitgrid(const std::vector<uint8_t>& bytes, int threshold) {
    ParsedImage img = parse_image(bytes, detect_format(bytes));
    if (auto* bits = std::get_if<BitGrid>(&img)) return std::move(*bits);
    return binarize(std::get<GrayGrid>(img), threshold);
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                               std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::string& path, const std::string& data) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open file for writing: " + path);
    file.write(data.data(), std::streamsize(data.size()));
    if (!file) throw std::runtime_error("write failed: " + path);
}

} // namespace glyphgeom
