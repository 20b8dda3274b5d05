#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "arifs/dataset.hpp"
#include "arifs/error.hpp"

namespace arifs {

namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC-4180 style reader: double-quoted fields may hold delimiters, newlines and
// doubled quotes. Returns false at end of input.
class RecordReader {
 public:
  RecordReader(std::istream& in, char delimiter, std::string_view source)
      : in_(in), delimiter_(delimiter), source_(source) {}

  bool next(Record& record) {
    record.fields.clear();
    int ch = in_.peek();
    // Skip blank lines between records.
    while (ch == '\n' || ch == '\r') {
      consume_newline();
      ch = in_.peek();
    }
    if (ch == std::char_traits<char>::eof()) return false;
    record.line = line_;

    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    while (true) {
      ch = in_.get();
      if (ch == std::char_traits<char>::eof()) {
        if (quoted) fail(ErrorCode::MalformedCsv, "unterminated quoted field", record.line);
        record.fields.push_back(std::move(field));
        return true;
      }
      const char c = static_cast<char>(ch);
      if (quoted) {
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
        continue;
      }
      if (c == '"' && field.empty() && !was_quoted) {
        quoted = true;
        was_quoted = true;
      } else if (c == delimiter_) {
        record.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (c == '\r' || c == '\n') {
        if (c == '\r' && in_.peek() == '\n') in_.get();
        ++line_;
        record.fields.push_back(std::move(field));
        return true;
      } else if (was_quoted) {
        fail(ErrorCode::MalformedCsv, "text after closing quote", line_);
      } else {
        field.push_back(c);
      }
    }
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& what, std::size_t line) const {
    throw Error(code, std::string(source_) + ":" + std::to_string(line) + ": " + what);
  }

 private:
  void consume_newline() {
    const int ch = in_.get();
    if (ch == '\r' && in_.peek() == '\n') in_.get();
    ++line_;
  }

  std::istream& in_;
  char delimiter_;
  std::string_view source_;
  std::size_t line_ = 1;
};

class Interner {
 public:
  Code intern(const std::string& value) {
    auto [it, inserted] = index_.try_emplace(value, static_cast<Code>(values_.size()));
    if (inserted) values_.push_back(value);
    return it->second;
  }
  std::vector<std::string> release() { return std::move(values_); }

 private:
  std::unordered_map<std::string, Code> index_;
  std::vector<std::string> values_;
};

void write_field(std::ostream& out, const std::string& value, char delimiter) {
  const bool needs_quotes = value.find_first_of(std::string{delimiter, '"', '\n', '\r'}) !=
                            std::string::npos;
  if (!needs_quotes) {
    out << value;
    return;
  }
  out << '"';
  for (char c : value) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

CategoricalDataset read_csv(std::istream& in, const CsvOptions& options, std::string_view source) {
  // Tolerate a UTF-8 byte order mark.
  if (in.peek() == 0xEF) {
    char bom[3] = {};
    in.read(bom, 3);
    if (!(bom[1] == '\xBB' && bom[2] == '\xBF')) {
      throw Error(ErrorCode::MalformedCsv, std::string(source) + ":1: invalid leading bytes");
    }
  }

  RecordReader reader(in, options.delimiter, source);
  Record header;
  if (!reader.next(header)) {
    throw Error(ErrorCode::EmptyFile, std::string(source) + ": no header row");
  }
  const std::size_t width = header.fields.size();
  if (width < 2) {
    reader.fail(ErrorCode::MalformedCsv, "need at least one feature column and a label column",
                header.line);
  }
  for (const auto& name : header.fields) {
    if (name.empty()) reader.fail(ErrorCode::MissingValue, "empty column name", header.line);
  }
  const std::size_t n = width - 1;

  std::vector<Interner> features(n);
  Interner labels;
  std::vector<Code> cells;
  std::vector<Code> label_codes;

  Record record;
  while (reader.next(record)) {
    if (record.fields.size() != width) {
      reader.fail(ErrorCode::RaggedRow,
                  "expected " + std::to_string(width) + " fields, found " +
                      std::to_string(record.fields.size()),
                  record.line);
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (record.fields[c].empty()) {
        reader.fail(ErrorCode::MissingValue, "empty value in column '" + header.fields[c] + "'",
                    record.line);
      }
    }
    for (std::size_t i = 0; i < n; ++i) cells.push_back(features[i].intern(record.fields[i]));
    label_codes.push_back(labels.intern(record.fields[n]));
  }
  if (label_codes.empty()) {
    throw Error(ErrorCode::EmptyFile, std::string(source) + ": header but no data rows");
  }

  std::vector<std::vector<std::string>> domains;
  domains.reserve(n);
  for (auto& f : features) domains.push_back(f.release());
  header.fields.pop_back();
  return {std::move(cells), std::move(label_codes), std::move(header.fields), std::move(domains),
          labels.release()};
}

CategoricalDataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_csv(in, options, path.string());
}

void write_csv(const CategoricalDataset& ds, std::ostream& out, const CsvOptions& options) {
  const char d = options.delimiter;
  for (const auto& name : ds.feature_names()) {
    write_field(out, name, d);
    out << d;
  }
  out << "label\n";
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    auto row = ds.row(r);
    for (std::size_t i = 0; i < row.size(); ++i) {
      write_field(out, ds.decode(FeatureId{i}, row[i]), d);
      out << d;
    }
    write_field(out, ds.decode_label(ds.label(r)), d);
    out << '\n';
  }
}

void save_csv(const CategoricalDataset& ds, const std::filesystem::path& path,
              const CsvOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_csv(ds, out, options);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace arifs
