// Writes the bundled world files used by the tests and the CLI examples.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "care/errors.h"
#include "care/harness/scenarios.h"
#include "care/io.h"

namespace {

constexpr std::uint64_t kExplorationSeed = 7;
constexpr std::uint64_t kCorridorSeedBase = 100;

}  // namespace

int main(int argc, char** argv) {
  using namespace care;
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data/worlds";
  try {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const sim::WorldModel& world) {
      WriteTextFile((dir / name).string(), sim::FormatWorld(world));
      std::cout << (dir / name).string() << "\n";
    };
    write("exploration_10box.world", harness::MakeExplorationWorld(kExplorationSeed));
    sim::WorldModel open_floor;
    open_floor.bounds = {{0.0, 0.0}, {harness::kArenaLength, harness::kArenaWidth}};
    write("open_floor.world", open_floor);
    for (int i = 1; i <= 10; ++i) {
      write(fmt::format("corridor_{:02}.world", i),
            harness::MakeCorridorWorld(kCorridorSeedBase + i, true));
    }
    write("corridor_empty.world", harness::MakeCorridorWorld(0, false));
    write("dynamic_corridor.world", harness::MakeDynamicCorridorWorld());
  } catch (const std::exception& e) {
    std::cerr << "gen_worlds: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
