#include "ngc/container.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ngc {

namespace {

constexpr char k_magic[4] = {'N', 'G', 'C', '1'};

class Writer {
public:
    explicit Writer(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot write " + path.string());
    }

    void u32(std::uint32_t v) {
        char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                     static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
        out_.write(b, 4);
    }

    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

    void raw(const char* data, std::size_t n) { out_.write(data, static_cast<std::streamsize>(n)); }

    void u32_array(const std::vector<std::uint32_t>& v) {
        for (std::uint32_t x : v) u32(x);
    }

    void finish() {
        out_.flush();
        if (!out_) throw std::runtime_error("write failure");
    }

private:
    std::ofstream out_;
};

class Reader {
public:
    explicit Reader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
        if (!in_) throw std::runtime_error("cannot open index file " + path.string());
    }

    std::uint32_t u32() {
        unsigned char b[4];
        in_.read(reinterpret_cast<char*>(b), 4);
        check();
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    }

    std::string str() {
        std::uint32_t n = u32();
        std::string s(n, '\0');
        in_.read(s.data(), n);
        check();
        return s;
    }

    void raw(char* data, std::size_t n) {
        in_.read(data, static_cast<std::streamsize>(n));
        check();
    }

    std::vector<std::uint32_t> u32_array(std::size_t n) {
        std::vector<std::uint32_t> v(n);
        for (auto& x : v) x = u32();
        return v;
    }

private:
    void check() {
        if (!in_) throw std::runtime_error("truncated or corrupt index file");
    }

    std::ifstream in_;
};

} // namespace

void save_index(const std::filesystem::path& path, const IndexBundle& bundle) {
    Writer w(path);
    w.raw(k_magic, 4);

    const Vocabulary& vocab = bundle.vocab;
    const GroupedIndex& index = bundle.index;

    w.u32(vocab.size());
    w.u32(index.slot_count);
    w.u32(static_cast<std::uint32_t>(index.doc_table.size()));
    w.u32(static_cast<std::uint32_t>(index.para_table.size()));

    for (WordId id = 1; id <= vocab.size(); ++id) {
        w.u32(vocab.frequency[id]);
        w.str(vocab.id_to_word[id]);
    }
    for (const DocRecord& d : index.doc_table) {
        w.u32(d.first_slot);
        w.str(d.doc_id);
    }
    for (const ParaRecord& p : index.para_table) {
        w.u32(p.doc_index);
        w.u32(p.ordinal);
        w.u32(p.first_slot);
        w.u32(p.word_count);
        w.u32(p.first_text_pos);
    }
    w.u32_array(index.next_position);
    w.u32_array(index.next_word_id);
    w.u32_array(index.slot_word_id);
    w.u32_array(index.text_pos);
    w.u32_array(bundle.table.length);
    w.u32_array(bundle.table.next_phrase);
    w.u32_array(bundle.table.prev_phrase);
    w.finish();
}

IndexBundle load_index(const std::filesystem::path& path) {
    Reader r(path);
    char magic[4];
    r.raw(magic, 4);
    if (!std::equal(magic, magic + 4, k_magic)) {
        throw std::runtime_error("not an index file (bad magic): " + path.string());
    }

    IndexBundle bundle;
    const std::uint32_t vocab_size = r.u32();
    const std::uint32_t slot_count = r.u32();
    const std::uint32_t doc_count = r.u32();
    const std::uint32_t para_count = r.u32();

    Vocabulary& vocab = bundle.vocab;
    vocab.id_to_word.resize(vocab_size + 1);
    vocab.frequency.resize(vocab_size + 1, 0);
    vocab.group_offset.resize(vocab_size + 1, 0);
    std::uint32_t offset = 0;
    for (WordId id = 1; id <= vocab_size; ++id) {
        vocab.frequency[id] = r.u32();
        vocab.id_to_word[id] = r.str();
        vocab.word_to_id.emplace(vocab.id_to_word[id], id);
        vocab.group_offset[id] = offset;
        offset += vocab.frequency[id];
    }
    if (offset != slot_count) throw std::runtime_error("corrupt index file: frequency sum mismatch");

    GroupedIndex& index = bundle.index;
    index.slot_count = slot_count;
    index.doc_table.resize(doc_count);
    for (DocRecord& d : index.doc_table) {
        d.first_slot = r.u32();
        d.doc_id = r.str();
    }
    index.para_table.resize(para_count);
    for (ParaRecord& p : index.para_table) {
        p.doc_index = r.u32();
        p.ordinal = r.u32();
        p.first_slot = r.u32();
        p.word_count = r.u32();
        p.first_text_pos = r.u32();
    }
    index.next_position = r.u32_array(slot_count);
    index.next_word_id = r.u32_array(slot_count);
    index.slot_word_id = r.u32_array(slot_count);
    index.text_pos = r.u32_array(slot_count);
    bundle.table.length = r.u32_array(slot_count);
    bundle.table.next_phrase = r.u32_array(slot_count);
    bundle.table.prev_phrase = r.u32_array(slot_count);

    // Bounds checks so a damaged file fails here, not deep in a traversal.
    auto check_slots = [&](const std::vector<std::uint32_t>& v, const char* what) {
        for (std::uint32_t x : v) {
            if (x >= slot_count && x != k_none) {
                throw std::runtime_error(std::string("corrupt index file: ") + what);
            }
        }
    };
    check_slots(index.next_position, "next_position out of range");
    check_slots(bundle.table.next_phrase, "next_phrase out of range");
    check_slots(bundle.table.prev_phrase, "prev_phrase out of range");
    for (std::uint32_t x : index.next_word_id) {
        if (x > vocab_size) throw std::runtime_error("corrupt index file: next_word_id out of range");
    }
    for (std::uint32_t x : index.slot_word_id) {
        if (x == 0 || x > vocab_size) {
            throw std::runtime_error("corrupt index file: slot_word_id out of range");
        }
    }
    for (std::uint32_t x : index.text_pos) {
        if (x >= slot_count) throw std::runtime_error("corrupt index file: text_pos out of range");
    }
    for (const DocRecord& d : index.doc_table) {
        if (d.first_slot >= slot_count && d.first_slot != k_none) {
            throw std::runtime_error("corrupt index file: document start out of range");
        }
    }
    for (const ParaRecord& p : index.para_table) {
        if (p.doc_index >= doc_count || (p.first_slot >= slot_count && p.first_slot != k_none) ||
            p.first_text_pos > slot_count || p.word_count > slot_count) {
            throw std::runtime_error("corrupt index file: paragraph record out of range");
        }
    }
    return bundle;
}

} // namespace ngc
