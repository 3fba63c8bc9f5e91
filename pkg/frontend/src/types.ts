/** Wire types of the grading service's JSON API, consumed verbatim. */

export interface QuestionSummary {
  id: string;
  prompt: string;
  lexer: string;
}

export type MistakeKind = "misplaced" | "missing" | "extra";

export interface WireMistake {
  kind: MistakeKind;
  value: string;
  /** [start, end) byte range in the submitted response; absent for missing. */
  span?: [number, number];
}

export interface AttemptResult {
  grade: number;
  messages: string[];
  mistakes: WireMistake[];
  chosen_answer_index: number;
}

/** One row of the session history panel. */
export interface AttemptView {
  attemptNumber: number;
  questionId: string;
  response: string;
  result: AttemptResult;
}
