#include "lwflat/sequence_io.hpp"

#include <fstream>
#include <sstream>

namespace lwflat {

namespace {

std::string location_text(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column);
}

} // namespace

SequenceParseError::SequenceParseError(std::string message, std::size_t line,
                                       std::size_t column)
    : std::runtime_error(std::move(message) + " at " +
                         location_text(line, column)),
      line(line),
      column(column) {}

std::vector<SequenceVariant> parse_sequences(std::istream& in) {
    std::vector<SequenceVariant> out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<std::int8_t> signs;
        std::vector<std::uint8_t> bits;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const char c = raw[i];
            if (c == '#') break;
            if (c == ' ' || c == '\t' || c == '\r') continue;
            const std::size_t col = i + 1;
            switch (c) {
                case '+':
                case '-':
                    if (!bits.empty())
                        throw SequenceParseError(
                            std::string("mixed alphabet: sign '") + c +
                                "' in a 0/1 sequence",
                            line_no, col);
                    signs.push_back(c == '+' ? 1 : -1);
                    break;
                case '0':
                case '1':
                    if (!signs.empty())
                        throw SequenceParseError(
                            std::string("mixed alphabet: bit '") + c +
                                "' in a +/- sequence",
                            line_no, col);
                    bits.push_back(c == '1' ? 1 : 0);
                    break;
                default:
                    throw SequenceParseError(
                        std::string("unexpected character '") + c + "'",
                        line_no, col);
            }
        }
        if (!signs.empty())
            out.emplace_back(SignSequence(std::move(signs)));
        else if (!bits.empty())
            out.emplace_back(BinarySequence(std::move(bits)));
    }
    return out;
}

std::vector<SequenceVariant> parse_sequences(const std::string& text) {
    std::istringstream in(text);
    return parse_sequences(in);
}

std::vector<SequenceVariant> parse_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return parse_sequences(in);
}

std::string format_sequence(const SequenceVariant& s) {
    std::string out;
    if (const auto* sign = std::get_if<SignSequence>(&s)) {
        out.reserve(sign->size());
        for (std::size_t j = 0; j < sign->size(); ++j)
            out.push_back(sign->sign(j) == 1 ? '+' : '-');
    } else {
        const auto& bin = std::get<BinarySequence>(s);
        out.reserve(bin.size());
        for (std::size_t j = 0; j < bin.size(); ++j)
            out.push_back(bin.bit(j) ? '1' : '0');
    }
    return out;
}

} // namespace lwflat
