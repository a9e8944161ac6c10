#pragma once

#include "webcurate/classifier.hpp"
#include "webcurate/code_extractor.hpp"
#include "webcurate/corpus_io.hpp"
#include "webcurate/dedup.hpp"
#include "webcurate/extraction.hpp"
#include "webcurate/html_dom.hpp"
#include "webcurate/math_extractor.hpp"
#include "webcurate/pipeline.hpp"
#include "webcurate/qa_extractor.hpp"
#include "webcurate/quality_filters.hpp"
#include "webcurate/text.hpp"
