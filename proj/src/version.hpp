#pragma once

#define BECRAD_VERSION_MAJOR 1
#define BECRAD_VERSION_MINOR 0
#define BECRAD_VERSION_PATCH 0
#define BECRAD_VERSION_STRING "1.0.0"
