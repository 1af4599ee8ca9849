#pragma once

#include <filesystem>
#include <string>

#include "euc/theory.hpp"

namespace fixture {

inline std::filesystem::path root() { return EUC_SOURCE_DIR; }
inline std::filesystem::path appendix() { return root() / "data" / "theory" / "appendix.thy"; }
inline std::filesystem::path dir(const std::string& name) { return root() / "fixtures" / name; }

inline std::string read(const std::filesystem::path& p) { return euc::read_text_file(p); }

inline euc::Registry registry(const std::string& name) {
    return euc::load_registry({appendix(), dir(name) / "stubs.thy"}, dir(name) / "master.txt");
}

inline euc::Registry appendix_only() { return euc::load_registry({appendix()}, std::nullopt); }

} // namespace fixture
