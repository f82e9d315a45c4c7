#pragma once

#include "cboom/atlas.hpp"
#include "cboom/boom_tables.hpp"
#include "cboom/catalog.hpp"
#include "cboom/count_table.hpp"
#include "cboom/cyclotomic.hpp"
#include "cboom/diff_tables.hpp"
#include "cboom/field.hpp"
#include "cboom/field_spec.hpp"
#include "cboom/function.hpp"
#include "cboom/parallel.hpp"
#include "cboom/text.hpp"
#include "cboom/theorems.hpp"
#include "cboom/verdict.hpp"
#include "cboom/walsh.hpp"
