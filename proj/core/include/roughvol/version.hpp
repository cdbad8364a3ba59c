#pragma once

#define ROUGHVOL_VERSION "0.1.0"
