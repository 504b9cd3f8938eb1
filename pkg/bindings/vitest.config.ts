import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // the fallback test temporarily renames the shared library, which
    // must not race with the differential tests
    fileParallelism: false,
  },
});
